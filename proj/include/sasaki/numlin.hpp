#pragma once

#include <Eigen/Dense>

#include "sasaki/errors.hpp"

namespace sasaki {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Absolute/relative tolerance pair used by every rank and residual decision.
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;

  Tolerance() = default;
  Tolerance(double abs_t, double rel_t);

  /// Scale-aware pivot threshold: abs_tol * (1 + max_abs_entry).
  double pivot_threshold(double max_abs_entry) const;
};

double max_abs(const Matrix& m);

/// Span of linearly independent vectors inside R^ambient_dim.
/// Keeps the caller's basis and a Euclidean-orthonormal basis side by side.
class Subspace {
 public:
  /// basis columns must be linearly independent to tolerance.
  explicit Subspace(Matrix basis, const Tolerance& tol = {});

  /// Span of the listed coordinate axes (0-based).
  static Subspace coordinate(int ambient_dim, const std::vector<int>& axes);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  const Matrix& orthonormal_basis() const { return q_; }

  /// Euclidean distance from v to the span.
  double distance_to(const Vector& v) const;
  bool contains(const Vector& v, const Tolerance& tol = {}) const;

 private:
  Matrix basis_;
  Matrix q_;
};

bool subspace_contains(const Subspace& s, const Vector& v, const Tolerance& tol = {});

/// Maximum principal-angle sine between two subspaces; 1 when ranks differ.
double subspace_distance(const Subspace& a, const Subspace& b);

/// Solve Ax = b for square nonsingular A; throws SingularMatrix when the
/// smallest pivot falls below the tolerance threshold.
Vector solve(const Matrix& a, const Vector& b, const Tolerance& tol = {});

struct LeastSquaresResult {
  Vector solution;
  double residual = 0.0;
  bool rank_deficient = false;
  int rank = 0;
};

/// Minimum-norm least squares via SVD; rank decided by the pivot threshold.
LeastSquaresResult least_squares(const Matrix& a, const Vector& b, const Tolerance& tol = {});

/// Pivoted-factorization positive definiteness check (no eigenvalues).
bool is_positive_definite(const Matrix& gram, const Tolerance& tol = {});

/// Gram-orthogonal complement of a subspace. Throws DegenerateGram.
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram, const Tolerance& tol = {});

/// Modified Gram-Schmidt with respect to the inner product given by gram.
/// Columns that become dependent (norm below threshold) are dropped.
Matrix gram_orthonormalize(const Matrix& vectors, const Matrix& gram, const Tolerance& tol = {});

/// Orthogonal projector onto span(basis columns) w.r.t. the gram inner product.
Matrix gram_projector(const Matrix& basis, const Matrix& gram, const Tolerance& tol = {});

}  // namespace sasaki

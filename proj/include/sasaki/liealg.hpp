#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sasaki/numlin.hpp"

namespace sasaki {

/// Finite-dimensional real Lie algebra given by structure constants on a
/// fixed basis: [e_i, e_j] = sum_k c[i][j][k] e_k (indices 0-based).
///
/// Constants are stored for i < j only; the mirror is generated on read, so
/// antisymmetry cannot be corrupted.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);

  static LieAlgebra abelian(int dim) { return LieAlgebra(dim); }

  int dim() const { return dim_; }

  /// Sets [e_i, e_j] for i != j; coeffs has length dim. Stored as the
  /// canonical i<j entry (negated when i > j).
  void set_bracket(int i, int j, const Vector& coeffs);

  /// [e_i, e_j] as a coordinate vector.
  Vector bracket_basis(int i, int j) const;

  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad(x): y -> [x, y].
  Matrix adjoint(const Vector& x) const;

  /// Max over basis triples of |[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]|.
  double jacobi_residual() const;

  /// Kernel of the stacked adjoint map x -> (ad e_1(x), ..., ad e_n(x)).
  /// Rank 0 centers yield a subspace of rank 0 (empty basis is represented
  /// by returning std::nullopt-like empty optional; see center_rank).
  int center_rank(const Tolerance& tol = {}) const;
  /// Center as a subspace; only valid when center_rank > 0.
  Subspace center(const Tolerance& tol = {}) const;

  std::pair<bool, double> is_subalgebra(const Subspace& s, const Tolerance& tol = {}) const;
  std::pair<bool, double> is_ideal(const Subspace& s, const Tolerance& tol = {}) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int upper_index(int i, int j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }
  Matrix center_constraints() const;

  int dim_;
  std::vector<Vector> upper_;  // entry for each pair i < j
  std::vector<std::string> labels_;
};

}  // namespace sasaki

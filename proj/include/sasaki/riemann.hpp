#pragma once

#include "sasaki/liealg.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

/// Lie algebra with a left-invariant metric (inner product on the algebra).
struct MetricLieAlgebra {
  LieAlgebra algebra;
  Matrix gram;

  MetricLieAlgebra(LieAlgebra alg, Matrix g, const Tolerance& tol = {});

  int dim() const { return algebra.dim(); }
  double inner(const Vector& x, const Vector& y) const;
};

/// Levi-Civita connection on left-invariant fields:
/// nabla_{e_i} e_j = sum_k gamma[i](k, j) e_k.
struct Connection {
  std::vector<Matrix> gamma;  // gamma[i].col(j) = coordinates of nabla_{e_i} e_j

  Vector covariant(const Vector& x, const Vector& y) const;
};

/// Koszul formula 2g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
Connection levi_civita(const MetricLieAlgebra& m);

/// Covariant curvature components R[i][j][k][l] = g(R(e_i,e_j)e_k, e_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
/// With this convention a Sasakian structure satisfies R(X,Y)xi = eta(Y)X - eta(X)Y.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int n);

  int dim() const { return n_; }
  double operator()(int i, int j, int k, int l) const { return r_[flat(i, j, k, l)]; }
  double& at(int i, int j, int k, int l) { return r_[flat(i, j, k, l)]; }

  /// Full contraction with four coordinate vectors.
  double evaluate(const Vector& x, const Vector& y, const Vector& z, const Vector& w) const;

  /// Max residuals of the antisymmetries, pair symmetry and first Bianchi.
  VerificationReport symmetry_report(const Tolerance& tol = {}) const;

  double frobenius_norm() const;

 private:
  int flat(int i, int j, int k, int l) const { return ((i * n_ + j) * n_ + k) * n_ + l; }
  int n_;
  std::vector<double> r_;
};

CurvatureTensor curvature(const MetricLieAlgebra& m, const Connection& conn);
CurvatureTensor curvature(const MetricLieAlgebra& m);

/// Sectional curvature R(X,Y,Y,X) / (|X|^2 |Y|^2 - g(X,Y)^2).
double sectional(const MetricLieAlgebra& m, const CurvatureTensor& r, const Vector& x,
                 const Vector& y, const Tolerance& tol = {});

/// Residual diagnostics for the connection (torsion, metric compatibility).
double torsion_residual(const MetricLieAlgebra& m, const Connection& conn);
double metric_compatibility_residual(const MetricLieAlgebra& m, const Connection& conn);

/// O'Neill sectional curvature of the base of the submersion along the unit
/// Killing field xi: K_B = (R(X,Y,Y,X) + 3/4 |V[X,Y]|^2) / area^2 for
/// horizontal X, Y, where V projects onto R xi.
double oneill_base_sectional(const MetricLieAlgebra& m, const CurvatureTensor& r,
                             const Vector& eta, const Vector& xi, const Vector& x,
                             const Vector& y, const Tolerance& tol = {});

/// Sign conventions for the A-tensor cross terms in the full O'Neill formula.
/// Standard is the variant consistent with the 3/4-formula above; the flipped
/// variant is kept for convention diagnostics and fails that contract.
enum class ONeillVariant { standard, flipped };

struct BaseCurvature {
  Matrix frame;            // columns: g-orthonormal basis of ker eta
  CurvatureTensor tensor;  // components w.r.t. that frame
};

/// Full O'Neill base curvature on ker eta (fibers are totally geodesic since
/// xi is a unit Killing field). Requires g(., xi) = eta and |xi|_g = 1.
BaseCurvature oneill_base_curvature(const MetricLieAlgebra& m, const Vector& eta,
                                    const Vector& xi,
                                    ONeillVariant variant = ONeillVariant::standard,
                                    const Tolerance& tol = {});

}  // namespace sasaki

#pragma once

#include <optional>

#include "sasaki/riemann.hpp"

namespace sasaki {

/// Almost contact metric structure (phi, xi, eta, g) on a metric Lie algebra.
/// phi columns are the images of the basis vectors; eta is a covector.
struct ContactMetricStructure {
  MetricLieAlgebra base;
  Matrix phi;
  Vector xi;
  Vector eta;

  int dim() const { return base.dim(); }
};

/// Left-invariant exterior derivative of eta: d_eta(X,Y) = -1/2 eta([X,Y]).
double d_eta(const LieAlgebra& algebra, const Vector& eta, const Vector& x, const Vector& y);
double d_eta(const ContactMetricStructure& s, const Vector& x, const Vector& y);

/// N_phi(X,Y) = phi^2 [X,Y] + [phi X, phi Y] - phi[phi X, Y] - phi[X, phi Y].
Vector nijenhuis_phi(const ContactMetricStructure& s, const Vector& x, const Vector& y);

/// One report entry per contact metric axiom.
VerificationReport verify_contact_metric(const ContactMetricStructure& s,
                                         const Tolerance& tol = {});

/// Contact metric axioms plus normality N_phi = -2 d_eta (x) xi.
VerificationReport verify_sasakian(const ContactMetricStructure& s, const Tolerance& tol = {});

/// h = (1/2) L_xi phi with (L_xi phi)X = [xi, phi X] - phi[xi, X].
Matrix h_tensor(const ContactMetricStructure& s);

/// g-Frobenius norm of an endomorphism (frame independent).
double endomorphism_norm(const MetricLieAlgebra& m, const Matrix& a, const Tolerance& tol = {});

struct KMuSolution {
  double k = 0.0;
  std::optional<double> mu;      // absent when the mu column is rank deficient (h ~ 0)
  double residual = 0.0;         // least-squares residual over all components
  std::optional<double> boeckx;  // absent when k >= 1 - tol
  double h_norm = 0.0;
};

/// Least-squares fit of R(X,Y)xi = k(eta(Y)X - eta(X)Y) + mu(eta(Y)hX - eta(X)hY)
/// over all ordered basis pairs. Throws NotContactMetric when the axioms fail.
KMuSolution solve_k_mu(const ContactMetricStructure& s, const Tolerance& tol = {});

/// Boeckx invariant I = (1 - mu/2) / sqrt(1 - k). Requires k < 1.
double boeckx_invariant(double k, double mu);

/// D-homothetic deformation: eta' = a eta, xi' = xi/a, phi' = phi,
/// g' = a g + a(a-1) eta (x) eta. Requires a > 0.
ContactMetricStructure d_homothetic(const ContactMetricStructure& s, double a);

/// The unique phi with g(X, phi Y) = d_eta(X, Y): phi = G^{-1} D.
Matrix recover_phi(const MetricLieAlgebra& m, const Vector& eta, const Tolerance& tol = {});

/// Pang invariant of a candidate Legendre distribution:
/// Pi[p][q] = 2 d_eta([xi, b_p], b_q) on the given basis of D.
Matrix pang_invariant(const ContactMetricStructure& s, const Subspace& d,
                      const Tolerance& tol = {});

/// Checks rank (dim-1)/2, eta|_D = 0, d_eta|_{DxD} = 0 and integrability.
std::pair<bool, VerificationReport> is_legendre(const ContactMetricStructure& s,
                                                const Subspace& d, const Tolerance& tol = {});

/// Max distance of nabla_X Y from span(D) over basis pairs of D.
std::pair<bool, double> is_totally_geodesic(const ContactMetricStructure& s, const Subspace& d,
                                            const Tolerance& tol = {});

}  // namespace sasaki

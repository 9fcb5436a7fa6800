#include "sasaki/contact.hpp"

#include <cmath>

namespace sasaki {

double d_eta(const LieAlgebra& algebra, const Vector& eta, const Vector& x, const Vector& y) {
  return -0.5 * eta.dot(algebra.bracket(x, y));
}

double d_eta(const ContactMetricStructure& s, const Vector& x, const Vector& y) {
  return d_eta(s.base.algebra, s.eta, x, y);
}

Vector nijenhuis_phi(const ContactMetricStructure& s, const Vector& x, const Vector& y) {
  const LieAlgebra& alg = s.base.algebra;
  return s.phi * (s.phi * alg.bracket(x, y)) + alg.bracket(s.phi * x, s.phi * y) -
         s.phi * alg.bracket(s.phi * x, y) - s.phi * alg.bracket(x, s.phi * y);
}

namespace {

Matrix d_eta_matrix(const LieAlgebra& algebra, const Vector& eta) {
  const int n = algebra.dim();
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = -0.5 * eta.dot(algebra.bracket_basis(i, j));
      d(i, j) = v;
      d(j, i) = -v;
    }
  }
  return d;
}

double min_ldlt_pivot(const Matrix& gram) {
  Eigen::LDLT<Matrix> ldlt(gram);
  if (ldlt.info() != Eigen::Success) return -max_abs(gram);
  return ldlt.vectorD().minCoeff();
}

}  // namespace

VerificationReport verify_contact_metric(const ContactMetricStructure& s, const Tolerance& tol) {
  const int n = s.dim();
  const Matrix& g = s.base.gram;
  VerificationReport report("contact metric axioms");

  const double scale = 1.0 + std::max({max_abs(g), max_abs(s.phi), s.eta.cwiseAbs().maxCoeff()});
  const double t = tol.abs_tol * scale;

  report.add("eta_xi_equals_one", std::abs(s.eta.dot(s.xi) - 1.0), t);

  Matrix phi2 = s.phi * s.phi + Matrix::Identity(n, n) - s.xi * s.eta.transpose();
  report.add("phi_squared_identity", max_abs(phi2), t);

  Matrix compat = s.phi.transpose() * g * s.phi - g + s.eta * s.eta.transpose();
  report.add("metric_compatibility", max_abs(compat), t);

  report.add("metric_associates_eta", (g * s.xi - s.eta).cwiseAbs().maxCoeff(), t);

  Matrix deta = d_eta_matrix(s.base.algebra, s.eta);
  report.add("d_eta_compatibility", max_abs(g * s.phi - deta), t);

  const double pivot = min_ldlt_pivot(g);
  const double pd_threshold = tol.pivot_threshold(max_abs(g));
  report.add("gram_positive_definite", std::max(0.0, pd_threshold - pivot), t);

  return report;
}

VerificationReport verify_sasakian(const ContactMetricStructure& s, const Tolerance& tol) {
  VerificationReport report = verify_contact_metric(s, tol);
  report.subject = "sasakian axioms";
  const int n = s.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vector nij = nijenhuis_phi(s, Vector::Unit(n, i), Vector::Unit(n, j));
      Vector defect = nij + 2.0 * d_eta(s, Vector::Unit(n, i), Vector::Unit(n, j)) * s.xi;
      worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
  }
  const double scale = 1.0 + std::max(max_abs(s.phi), s.eta.cwiseAbs().maxCoeff());
  report.add("normality", worst, tol.abs_tol * scale);
  return report;
}

Matrix h_tensor(const ContactMetricStructure& s) {
  const int n = s.dim();
  const LieAlgebra& alg = s.base.algebra;
  Matrix h(n, n);
  for (int j = 0; j < n; ++j) {
    Vector ej = Vector::Unit(n, j);
    h.col(j) = 0.5 * (alg.bracket(s.xi, s.phi * ej) - s.phi * alg.bracket(s.xi, ej));
  }
  return h;
}

double endomorphism_norm(const MetricLieAlgebra& m, const Matrix& a, const Tolerance& tol) {
  Matrix frame = gram_orthonormalize(Matrix::Identity(m.dim(), m.dim()), m.gram, tol);
  double acc = 0.0;
  for (int i = 0; i < frame.cols(); ++i) {
    Vector img = a * frame.col(i);
    acc += m.inner(img, img);
  }
  return std::sqrt(acc);
}

KMuSolution solve_k_mu(const ContactMetricStructure& s, const Tolerance& tol) {
  VerificationReport axioms = verify_contact_metric(s, tol);
  if (!axioms.passed()) {
    throw NotContactMetric("structure fails the contact metric axioms");
  }
  const int n = s.dim();
  const CurvatureTensor r = curvature(s.base);
  const Matrix h = h_tensor(s);
  Eigen::LLT<Matrix> llt(s.base.gram);

  const int pairs = n * (n - 1);
  Matrix a(pairs * n, 2);
  Vector b(pairs * n);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Coordinates of R(e_i, e_j) xi.
      Vector w(n);
      for (int l = 0; l < n; ++l) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += s.xi(k) * r(i, j, k, l);
        w(l) = acc;
      }
      Vector lhs = llt.solve(w);
      Vector col_k = s.eta(j) * Vector::Unit(n, i) - s.eta(i) * Vector::Unit(n, j);
      Vector col_mu = s.eta(j) * h.col(i) - s.eta(i) * h.col(j);
      for (int l = 0; l < n; ++l) {
        a(row, 0) = col_k(l);
        a(row, 1) = col_mu(l);
        b(row) = lhs(l);
        ++row;
      }
    }
  }

  KMuSolution out;
  out.h_norm = endomorphism_norm(s.base, h, tol);
  const double mu_col_norm = a.col(1).norm();
  if (mu_col_norm < tol.pivot_threshold(max_abs(a))) {
    // Sasakian case: mu is indeterminate, fit k alone.
    LeastSquaresResult fit = least_squares(a.col(0), b, tol);
    out.k = fit.solution(0);
    out.residual = fit.residual;
  } else {
    LeastSquaresResult fit = least_squares(a, b, tol);
    out.k = fit.solution(0);
    out.mu = fit.solution(1);
    out.residual = fit.residual;
  }
  if (out.mu && out.k < 1.0 - tol.abs_tol) {
    out.boeckx = boeckx_invariant(out.k, *out.mu);
  }
  return out;
}

double boeckx_invariant(double k, double mu) {
  if (k >= 1.0) throw KNotLessThanOne("Boeckx invariant requires k < 1");
  return (1.0 - mu / 2.0) / std::sqrt(1.0 - k);
}

ContactMetricStructure d_homothetic(const ContactMetricStructure& s, double a) {
  if (a <= 0.0) throw NonPositiveParameter("D-homothety requires a > 0");
  Matrix gram = a * s.base.gram + a * (a - 1.0) * s.eta * s.eta.transpose();
  return ContactMetricStructure{MetricLieAlgebra(s.base.algebra, std::move(gram)), s.phi,
                                s.xi / a, a * s.eta};
}

Matrix recover_phi(const MetricLieAlgebra& m, const Vector& eta, const Tolerance& tol) {
  if (eta.size() != m.dim()) throw DimensionMismatch("eta length != dim");
  if (!is_positive_definite(m.gram, tol)) {
    throw DegenerateGram("gram matrix not positive definite to tolerance");
  }
  Matrix d = d_eta_matrix(m.algebra, eta);
  return m.gram.llt().solve(d);
}

Matrix pang_invariant(const ContactMetricStructure& s, const Subspace& d, const Tolerance& tol) {
  if (d.ambient_dim() != s.dim()) throw DimensionMismatch("subspace ambient dim != dim");
  for (int p = 0; p < d.rank(); ++p) {
    const Vector& b = d.basis().col(p);
    if (std::abs(s.eta.dot(b)) > tol.abs_tol * (1.0 + b.norm())) {
      throw NotLegendreCandidate("eta does not vanish on the distribution");
    }
  }
  Matrix pi(d.rank(), d.rank());
  for (int p = 0; p < d.rank(); ++p) {
    Vector lie = s.base.algebra.bracket(s.xi, d.basis().col(p));
    for (int q = 0; q < d.rank(); ++q) {
      pi(p, q) = 2.0 * d_eta(s, lie, d.basis().col(q));
    }
  }
  return pi;
}

std::pair<bool, VerificationReport> is_legendre(const ContactMetricStructure& s,
                                                const Subspace& d, const Tolerance& tol) {
  VerificationReport report("legendre distribution");
  const int expected_rank = (s.dim() - 1) / 2;
  report.add_flag("rank_is_half_of_kernel", d.rank() == expected_rank);

  double eta_res = 0.0;
  for (int p = 0; p < d.rank(); ++p) {
    const Vector& b = d.basis().col(p);
    eta_res = std::max(eta_res, std::abs(s.eta.dot(b)) / (1.0 + b.norm()));
  }
  report.add("eta_vanishes", eta_res, tol.abs_tol);

  double deta_res = 0.0;
  for (int p = 0; p < d.rank(); ++p) {
    for (int q = p + 1; q < d.rank(); ++q) {
      deta_res = std::max(deta_res, std::abs(d_eta(s, d.basis().col(p), d.basis().col(q))));
    }
  }
  report.add("d_eta_vanishes", deta_res, tol.abs_tol);

  auto [closed, bracket_res] = s.base.algebra.is_subalgebra(d, tol);
  report.add_flag("integrable", closed);
  report.add("bracket_closure_residual", bracket_res, tol.pivot_threshold(1.0));

  return {report.passed(), report};
}

std::pair<bool, double> is_totally_geodesic(const ContactMetricStructure& s, const Subspace& d,
                                            const Tolerance& tol) {
  const Connection conn = levi_civita(s.base);
  double worst = 0.0;
  double scale = 0.0;
  for (int p = 0; p < d.rank(); ++p) {
    for (int q = 0; q < d.rank(); ++q) {
      Vector cov = conn.covariant(d.basis().col(p), d.basis().col(q));
      scale = std::max(scale, cov.norm());
      worst = std::max(worst, d.distance_to(cov));
    }
  }
  return {worst <= tol.pivot_threshold(scale), worst};
}

}  // namespace sasaki

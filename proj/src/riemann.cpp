#include "sasaki/riemann.hpp"

#include <cmath>

namespace sasaki {

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra alg, Matrix g, const Tolerance& tol)
    : algebra(std::move(alg)), gram(std::move(g)) {
  if (gram.rows() != algebra.dim() || gram.cols() != algebra.dim()) {
    throw DimensionMismatch("gram dimensions != algebra dim");
  }
  if (!gram.allFinite()) {
    throw DegenerateGram("gram entries must be finite");
  }
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + max_abs(gram))) {
    throw DegenerateGram("gram matrix is not symmetric");
  }
  if (!is_positive_definite(gram, tol)) {
    throw DegenerateGram("gram matrix is not positive definite to tolerance");
  }
}

double MetricLieAlgebra::inner(const Vector& x, const Vector& y) const {
  return x.dot(gram * y);
}

Vector Connection::covariant(const Vector& x, const Vector& y) const {
  const int n = static_cast<int>(gamma.size());
  Vector out = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    out += x(i) * (gamma[i] * y);
  }
  return out;
}

Connection levi_civita(const MetricLieAlgebra& m) {
  const int n = m.dim();
  Eigen::LLT<Matrix> llt(m.gram);
  if (llt.info() != Eigen::Success) {
    throw DegenerateGram("gram factorization failed");
  }
  // Cache the brackets and their metric duals.
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n));
  std::vector<std::vector<Vector>> gbr(n, std::vector<Vector>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      br[i][j] = m.algebra.bracket_basis(i, j);
      gbr[i][j] = m.gram * br[i][j];
    }
  }
  Connection conn;
  conn.gamma.assign(n, Matrix::Zero(n, n));
  Vector w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        w(k) = gbr[i][j](k) - gbr[j][k](i) + gbr[k][i](j);
      }
      conn.gamma[i].col(j) = llt.solve(0.5 * w);
    }
  }
  return conn;
}

CurvatureTensor::CurvatureTensor(int n) : n_(n), r_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

double CurvatureTensor::evaluate(const Vector& x, const Vector& y, const Vector& z,
                                 const Vector& w) const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < n_; ++k) {
        if (z(k) == 0.0) continue;
        for (int l = 0; l < n_; ++l) {
          acc += x(i) * y(j) * z(k) * w(l) * r_[flat(i, j, k, l)];
        }
      }
    }
  }
  return acc;
}

VerificationReport CurvatureTensor::symmetry_report(const Tolerance& tol) const {
  VerificationReport report("curvature tensor symmetries");
  double anti_ij = 0.0, anti_kl = 0.0, pair_sym = 0.0, bianchi = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        for (int l = 0; l < n_; ++l) {
          const double v = (*this)(i, j, k, l);
          anti_ij = std::max(anti_ij, std::abs(v + (*this)(j, i, k, l)));
          anti_kl = std::max(anti_kl, std::abs(v + (*this)(i, j, l, k)));
          pair_sym = std::max(pair_sym, std::abs(v - (*this)(k, l, i, j)));
          bianchi = std::max(
              bianchi, std::abs(v + (*this)(j, k, i, l) + (*this)(k, i, j, l)));
        }
      }
    }
  }
  const double t = tol.pivot_threshold(frobenius_norm());
  report.add("antisymmetry_first_pair", anti_ij, t);
  report.add("antisymmetry_second_pair", anti_kl, t);
  report.add("pair_symmetry", pair_sym, t);
  report.add("first_bianchi", bianchi, t);
  return report;
}

double CurvatureTensor::frobenius_norm() const {
  double acc = 0.0;
  for (double v : r_) acc += v * v;
  return std::sqrt(acc);
}

CurvatureTensor curvature(const MetricLieAlgebra& m, const Connection& conn) {
  const int n = m.dim();
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Operator of R(e_i, e_j) acting on coordinate columns.
      Matrix op = conn.gamma[i] * conn.gamma[j] - conn.gamma[j] * conn.gamma[i];
      Vector bij = m.algebra.bracket_basis(i, j);
      for (int s = 0; s < n; ++s) {
        if (bij(s) != 0.0) op -= bij(s) * conn.gamma[s];
      }
      Matrix cov = op.transpose() * m.gram;  // cov(k, l) = g(R(e_i,e_j)e_k, e_l)
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          r.at(i, j, k, l) = cov(k, l);
          r.at(j, i, k, l) = -cov(k, l);
        }
      }
    }
  }
  return r;
}

CurvatureTensor curvature(const MetricLieAlgebra& m) { return curvature(m, levi_civita(m)); }

double sectional(const MetricLieAlgebra& m, const CurvatureTensor& r, const Vector& x,
                 const Vector& y, const Tolerance& tol) {
  const double gxx = m.inner(x, x);
  const double gyy = m.inner(y, y);
  const double gxy = m.inner(x, y);
  const double area2 = gxx * gyy - gxy * gxy;
  if (area2 <= tol.pivot_threshold(std::max(gxx, gyy))) {
    throw DegeneratePlane("vectors do not span a 2-plane to tolerance");
  }
  return r.evaluate(x, y, y, x) / area2;
}

double torsion_residual(const MetricLieAlgebra& m, const Connection& conn) {
  const int n = m.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vector t = conn.gamma[i].col(j) - conn.gamma[j].col(i) - m.algebra.bracket_basis(i, j);
      worst = std::max(worst, t.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double metric_compatibility_residual(const MetricLieAlgebra& m, const Connection& conn) {
  // Left-invariant fields have constant inner products, so compatibility is
  // g(nabla_{e_i} e_j, e_k) + g(e_j, nabla_{e_i} e_k) = 0.
  const int n = m.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Matrix s = conn.gamma[i].transpose() * m.gram + m.gram * conn.gamma[i];
    worst = std::max(worst, s.cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void check_associated(const MetricLieAlgebra& m, const Vector& eta, const Vector& xi,
                      const Tolerance& tol) {
  const double scale = 1.0 + max_abs(m.gram);
  if ((m.gram * xi - eta).cwiseAbs().maxCoeff() > tol.abs_tol * scale) {
    throw NotAssociated("g(., xi) != eta");
  }
  if (std::abs(m.inner(xi, xi) - 1.0) > tol.abs_tol * scale) {
    throw NotAssociated("xi is not a unit vector");
  }
}

}  // namespace

double oneill_base_sectional(const MetricLieAlgebra& m, const CurvatureTensor& r,
                             const Vector& eta, const Vector& xi, const Vector& x,
                             const Vector& y, const Tolerance& tol) {
  check_associated(m, eta, xi, tol);
  const double hscale = tol.abs_tol * (1.0 + std::max(x.norm(), y.norm()));
  if (std::abs(eta.dot(x)) > hscale || std::abs(eta.dot(y)) > hscale) {
    throw NotHorizontal("inputs must lie in ker eta");
  }
  const double gxx = m.inner(x, x);
  const double gyy = m.inner(y, y);
  const double gxy = m.inner(x, y);
  const double area2 = gxx * gyy - gxy * gxy;
  if (area2 <= tol.pivot_threshold(std::max(gxx, gyy))) {
    throw DegeneratePlane("vectors do not span a 2-plane to tolerance");
  }
  const double vertical = m.inner(m.algebra.bracket(x, y), xi);  // xi is unit
  return (r.evaluate(x, y, y, x) + 0.75 * vertical * vertical) / area2;
}

BaseCurvature oneill_base_curvature(const MetricLieAlgebra& m, const Vector& eta,
                                    const Vector& xi, ONeillVariant variant,
                                    const Tolerance& tol) {
  check_associated(m, eta, xi, tol);
  const int n = m.dim();

  // g-orthonormal frame of ker eta from the projected coordinate basis.
  Matrix candidates(n, n);
  for (int i = 0; i < n; ++i) {
    candidates.col(i) = Vector::Unit(n, i) - eta(i) * xi;  // eta(e_i) = eta_i
  }
  Matrix frame = gram_orthonormalize(candidates, m.gram, tol);
  if (frame.cols() != n - 1) {
    throw DegenerateGram("horizontal frame has unexpected rank");
  }

  const Connection conn = levi_civita(m);
  const CurvatureTensor r = curvature(m, conn);
  const int h = n - 1;

  // A_X Y = (1/2) V[X,Y]; the fiber is R xi with unit Killing xi, so the
  // vertical part is a scalar along xi.
  Matrix a_coeff(h, h);
  for (int p = 0; p < h; ++p) {
    for (int q = 0; q < h; ++q) {
      a_coeff(p, q) = 0.5 * m.inner(m.algebra.bracket(frame.col(p), frame.col(q)), xi);
    }
  }

  const double sign = variant == ONeillVariant::standard ? 1.0 : -1.0;
  BaseCurvature base{frame, CurvatureTensor(h)};
  for (int p = 0; p < h; ++p) {
    for (int q = 0; q < h; ++q) {
      for (int u = 0; u < h; ++u) {
        for (int v = 0; v < h; ++v) {
          const double total =
              r.evaluate(frame.col(p), frame.col(q), frame.col(u), frame.col(v));
          const double cross = -2.0 * a_coeff(p, q) * a_coeff(u, v) +
                               a_coeff(q, u) * a_coeff(p, v) -
                               a_coeff(p, u) * a_coeff(q, v);
          base.tensor.at(p, q, u, v) = total + sign * cross;
        }
      }
    }
  }
  return base;
}

}  // namespace sasaki

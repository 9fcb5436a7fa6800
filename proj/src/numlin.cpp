#include "sasaki/numlin.hpp"

#include <cmath>

namespace sasaki {

Tolerance::Tolerance(double abs_t, double rel_t) : abs_tol(abs_t), rel_tol(rel_t) {
  if (abs_tol <= 0.0 || rel_tol <= 0.0) {
    throw InvalidParameter("Tolerance values must be strictly positive");
  }
}

double Tolerance::pivot_threshold(double max_abs_entry) const {
  return abs_tol * (1.0 + max_abs_entry);
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

int svd_rank(const Eigen::JacobiSVD<Matrix>& svd, double threshold) {
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > threshold) ++r;
  }
  return r;
}

}  // namespace

Subspace::Subspace(Matrix basis, const Tolerance& tol) : basis_(std::move(basis)) {
  if (basis_.cols() == 0 || basis_.rows() == 0) {
    throw InvalidParameter("Subspace requires at least one basis vector");
  }
  if (basis_.cols() > basis_.rows()) {
    throw DimensionMismatch("more basis vectors than ambient dimension");
  }
  if (!basis_.allFinite()) {
    throw InvalidParameter("Subspace basis entries must be finite");
  }
  Eigen::JacobiSVD<Matrix> svd(basis_, Eigen::ComputeThinU);
  const double threshold = tol.pivot_threshold(max_abs(basis_));
  if (svd_rank(svd, threshold) < basis_.cols()) {
    throw InvalidParameter("Subspace basis vectors are linearly dependent to tolerance");
  }
  // Thin Householder QR gives an orthonormal basis of the same span.
  Eigen::HouseholderQR<Matrix> qr(basis_);
  q_ = qr.householderQ() * Matrix::Identity(basis_.rows(), basis_.cols());
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& axes) {
  Matrix basis = Matrix::Zero(ambient_dim, static_cast<int>(axes.size()));
  for (int c = 0; c < static_cast<int>(axes.size()); ++c) {
    if (axes[c] < 0 || axes[c] >= ambient_dim) {
      throw DimensionMismatch("coordinate axis out of range");
    }
    basis(axes[c], c) = 1.0;
  }
  return Subspace(std::move(basis));
}

double Subspace::distance_to(const Vector& v) const {
  if (v.size() != basis_.rows()) {
    throw DimensionMismatch("vector/subspace ambient dimensions differ");
  }
  return (v - q_ * (q_.transpose() * v)).norm();
}

bool Subspace::contains(const Vector& v, const Tolerance& tol) const {
  return distance_to(v) <= tol.abs_tol * (1.0 + v.norm());
}

bool subspace_contains(const Subspace& s, const Vector& v, const Tolerance& tol) {
  return s.contains(v, tol);
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace ambient dimensions differ");
  }
  if (a.rank() != b.rank()) return 1.0;
  const Matrix& qa = a.orthonormal_basis();
  const Matrix& qb = b.orthonormal_basis();
  Matrix residual = qa - qb * (qb.transpose() * qa);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

Vector solve(const Matrix& a, const Vector& b, const Tolerance& tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve expects a square matrix");
  if (a.rows() != b.size()) throw DimensionMismatch("matrix/vector sizes differ");
  Eigen::PartialPivLU<Matrix> lu(a);
  const double threshold = tol.pivot_threshold(max_abs(a));
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot < threshold) {
    throw SingularMatrix("smallest pivot below tolerance threshold");
  }
  return lu.solve(b);
}

LeastSquaresResult least_squares(const Matrix& a, const Vector& b, const Tolerance& tol) {
  if (a.rows() != b.size()) throw DimensionMismatch("matrix/vector sizes differ");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double threshold = tol.pivot_threshold(max_abs(a));
  const int rank = svd_rank(svd, threshold);

  Vector coeffs = svd.matrixU().transpose() * b;
  Vector scaled = Vector::Zero(svd.singularValues().size());
  for (int i = 0; i < rank; ++i) scaled(i) = coeffs(i) / svd.singularValues()(i);

  LeastSquaresResult result;
  result.solution = svd.matrixV() * scaled;
  result.residual = (a * result.solution - b).norm();
  result.rank = rank;
  result.rank_deficient = rank < a.cols();
  return result;
}

bool is_positive_definite(const Matrix& gram, const Tolerance& tol) {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("gram must be square");
  Eigen::LDLT<Matrix> ldlt(gram);
  if (ldlt.info() != Eigen::Success) return false;
  const double threshold = tol.pivot_threshold(max_abs(gram));
  return ldlt.vectorD().minCoeff() > threshold;
}

Subspace orthogonal_complement(const Subspace& s, const Matrix& gram, const Tolerance& tol) {
  if (gram.rows() != s.ambient_dim()) {
    throw DimensionMismatch("gram/subspace ambient dimensions differ");
  }
  if (!is_positive_definite(gram, tol)) {
    throw DegenerateGram("gram matrix not positive definite to tolerance");
  }
  // The complement is the kernel of B^T G.
  Matrix constraints = s.basis().transpose() * gram;
  Eigen::JacobiSVD<Matrix> svd(constraints, Eigen::ComputeFullV);
  const double threshold = tol.pivot_threshold(max_abs(constraints));
  const int rank = svd_rank(svd, threshold);
  const int n = s.ambient_dim();
  if (rank >= n) throw DegenerateGram("subspace already spans the ambient space");
  Matrix kernel = svd.matrixV().rightCols(n - rank);
  return Subspace(kernel, tol);
}

Matrix gram_orthonormalize(const Matrix& vectors, const Matrix& gram, const Tolerance& tol) {
  if (vectors.rows() != gram.rows()) {
    throw DimensionMismatch("vectors/gram ambient dimensions differ");
  }
  const double threshold = tol.pivot_threshold(max_abs(vectors));
  Matrix out(vectors.rows(), vectors.cols());
  int kept = 0;
  for (int c = 0; c < vectors.cols(); ++c) {
    Vector v = vectors.col(c);
    for (int k = 0; k < kept; ++k) {
      v -= (out.col(k).transpose() * gram * v)(0) * out.col(k);
    }
    const double norm2 = (v.transpose() * gram * v)(0);
    if (norm2 <= threshold * threshold) continue;
    out.col(kept++) = v / std::sqrt(norm2);
  }
  return out.leftCols(kept);
}

Matrix gram_projector(const Matrix& basis, const Matrix& gram, const Tolerance& tol) {
  Matrix q = gram_orthonormalize(basis, gram, tol);
  return q * q.transpose() * gram;
}

}  // namespace sasaki

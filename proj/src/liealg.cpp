#include "sasaki/liealg.hpp"

#include <cmath>

namespace sasaki {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
  if (dim < 1 || dim > 8) {
    throw InvalidParameter("LieAlgebra dimension must be between 1 and 8");
  }
  upper_.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), Vector::Zero(dim));
  labels_.resize(dim);
  for (int i = 0; i < dim; ++i) labels_[i] = "e" + std::to_string(i + 1);
}

void LieAlgebra::set_bracket(int i, int j, const Vector& coeffs) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
  if (i == j) throw InvalidParameter("set_bracket requires distinct indices");
  if (coeffs.size() != dim_) throw DimensionMismatch("bracket coefficient length != dim");
  if (!coeffs.allFinite()) throw InvalidParameter("bracket coefficients must be finite");
  if (i < j) {
    upper_[upper_index(i, j)] = coeffs;
  } else {
    upper_[upper_index(j, i)] = -coeffs;
  }
}

Vector LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DimensionMismatch("basis index out of range");
  if (i == j) return Vector::Zero(dim_);
  return i < j ? upper_[upper_index(i, j)] : Vector(-upper_[upper_index(j, i)]);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("vector length != dim");
  Vector out = Vector::Zero(dim_);
  // Pairing the (i,j) and (j,i) terms keeps antisymmetry exact in floating
  // point: swapping the arguments negates every coefficient bitwise.
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const double coeff = x(i) * y(j) - x(j) * y(i);
      if (coeff != 0.0) out += coeff * upper_[upper_index(i, j)];
    }
  }
  return out;
}

Matrix LieAlgebra::adjoint(const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("vector length != dim");
  Matrix ad = Matrix::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x(i) == 0.0 || i == j) continue;
      ad.col(j) += x(i) * bracket_basis(i, j);
    }
  }
  return ad;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        Vector cyc = bracket(bracket_basis(i, j), Vector::Unit(dim_, k)) +
                     bracket(bracket_basis(j, k), Vector::Unit(dim_, i)) +
                     bracket(bracket_basis(k, i), Vector::Unit(dim_, j));
        worst = std::max(worst, cyc.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

Matrix LieAlgebra::center_constraints() const {
  Matrix stacked(static_cast<Eigen::Index>(dim_) * dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    stacked.middleRows(i * dim_, dim_) = adjoint(Vector::Unit(dim_, i));
  }
  return stacked;
}

int LieAlgebra::center_rank(const Tolerance& tol) const {
  Matrix stacked = center_constraints();
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const double threshold = tol.pivot_threshold(max_abs(stacked));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > threshold) ++rank;
  }
  return dim_ - rank;
}

Subspace LieAlgebra::center(const Tolerance& tol) const {
  Matrix stacked = center_constraints();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const double threshold = tol.pivot_threshold(max_abs(stacked));
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > threshold) ++rank;
  }
  if (rank >= dim_) throw InvalidParameter("center is trivial; no basis to return");
  return Subspace(svd.matrixV().rightCols(dim_ - rank), tol);
}

std::pair<bool, double> LieAlgebra::is_subalgebra(const Subspace& s, const Tolerance& tol) const {
  if (s.ambient_dim() != dim_) throw DimensionMismatch("subspace ambient dim != algebra dim");
  double worst = 0.0;
  double scale = 0.0;
  for (int p = 0; p < s.rank(); ++p) {
    for (int q = p + 1; q < s.rank(); ++q) {
      Vector br = bracket(s.basis().col(p), s.basis().col(q));
      scale = std::max(scale, br.norm());
      worst = std::max(worst, s.distance_to(br));
    }
  }
  return {worst <= tol.pivot_threshold(scale), worst};
}

std::pair<bool, double> LieAlgebra::is_ideal(const Subspace& s, const Tolerance& tol) const {
  if (s.ambient_dim() != dim_) throw DimensionMismatch("subspace ambient dim != algebra dim");
  double worst = 0.0;
  double scale = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int q = 0; q < s.rank(); ++q) {
      Vector br = bracket(Vector::Unit(dim_, i), s.basis().col(q));
      scale = std::max(scale, br.norm());
      worst = std::max(worst, s.distance_to(br));
    }
  }
  return {worst <= tol.pivot_threshold(scale), worst};
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != dim_) {
    throw DimensionMismatch("label count != dim");
  }
  labels_ = std::move(labels);
}

}  // namespace sasaki

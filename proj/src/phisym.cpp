#include "sasaki/phisym.hpp"

#include <cmath>
#include <limits>

#include "sasaki/sampling.hpp"

namespace sasaki {

ReductiveDecomposition ReductiveDecomposition::standard(const ContactMetricStructure& s,
                                                        const Tolerance& tol) {
  Matrix xi_col(s.dim(), 1);
  xi_col.col(0) = s.xi;
  Subspace h(xi_col, tol);
  // ker eta = gram-orthogonal complement of R xi, since g(., xi) = eta.
  Subspace m = orthogonal_complement(h, s.base.gram, tol);
  // Reductivity [h, m] in m.
  for (int q = 0; q < m.rank(); ++q) {
    Vector br = s.base.algebra.bracket(s.xi, m.basis().col(q));
    if (m.distance_to(br) > tol.pivot_threshold(br.norm())) {
      throw StructureMismatch("decomposition is not reductive: [h, m] leaves m");
    }
  }
  return ReductiveDecomposition{std::move(h), std::move(m)};
}

Vector ReductiveDecomposition::project_m(const Vector& v) const {
  const int n = static_cast<int>(v.size());
  const int hr = h.rank();
  const int mr = m.rank();
  if (hr + mr != n) throw DimensionMismatch("decomposition does not span the algebra");
  Matrix full(n, n);
  full.leftCols(hr) = h.basis();
  full.rightCols(mr) = m.basis();
  Vector c = full.partialPivLu().solve(v);
  return m.basis() * c.tail(mr);
}

Vector u_operator(const MetricLieAlgebra& metric, const ReductiveDecomposition& split,
                  const Vector& x, const Vector& y, const Tolerance& tol) {
  if (!split.m.contains(x, tol) || !split.m.contains(y, tol)) {
    throw NotInM("u_operator arguments must lie in m");
  }
  const Matrix& b = split.m.basis();
  const int r = split.m.rank();
  Matrix gm = b.transpose() * metric.gram * b;
  Vector w(r);
  for (int p = 0; p < r; ++p) {
    Vector zx = split.project_m(metric.algebra.bracket(b.col(p), x));
    Vector zy = split.project_m(metric.algebra.bracket(b.col(p), y));
    w(p) = metric.inner(zx, y) + metric.inner(zy, x);
  }
  return b * gm.llt().solve(0.5 * w);
}

VerificationReport check_parallel_lemma(const MetricLieAlgebra& metric,
                                        const ReductiveDecomposition& split, const Subspace& n,
                                        const Tolerance& tol) {
  const int dim = metric.dim();
  for (int q = 0; q < n.rank(); ++q) {
    if (!split.m.contains(n.basis().col(q), tol)) {
      throw NotInM("n must be a subspace of m");
    }
  }
  Matrix hn_basis(dim, split.h.rank() + n.rank());
  hn_basis.leftCols(split.h.rank()) = split.h.basis();
  hn_basis.rightCols(n.rank()) = n.basis();
  Subspace hn(hn_basis, tol);

  VerificationReport report("parallel distribution conditions");

  double closure = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int q = 0; q < hn.rank(); ++q) {
      closure = std::max(
          closure, hn.distance_to(metric.algebra.bracket(Vector::Unit(dim, i),
                                                         hn.basis().col(q))));
    }
  }
  report.add("bracket_closure_h_plus_n", closure, tol.abs_tol);

  double u_closure = 0.0;
  for (int p = 0; p < split.m.rank(); ++p) {
    for (int q = 0; q < n.rank(); ++q) {
      Vector u = u_operator(metric, split, split.m.basis().col(p), n.basis().col(q), tol);
      u_closure = std::max(u_closure, n.distance_to(u));
    }
  }
  report.add("u_maps_into_n", u_closure, tol.abs_tol);

  double adh = 0.0;
  for (int p = 0; p < split.h.rank(); ++p) {
    for (int q = 0; q < n.rank(); ++q) {
      adh = std::max(adh, n.distance_to(metric.algebra.bracket(split.h.basis().col(p),
                                                               n.basis().col(q))));
    }
  }
  report.add("ad_h_invariance", adh, tol.abs_tol);

  return report;
}

Vector reductive_connection(const MetricLieAlgebra& metric, const ReductiveDecomposition& split,
                            const Vector& x, const Vector& y, const Tolerance& tol) {
  if (!split.m.contains(x, tol) || !split.m.contains(y, tol)) {
    throw NotInM("reductive_connection arguments must lie in m");
  }
  return -0.5 * split.project_m(metric.algebra.bracket(x, y)) +
         u_operator(metric, split, x, y, tol);
}

ProductSplitResult verify_product_split(const FamilySpec& spec, const Tolerance& tol) {
  const FamilyId id = spec.id;
  if (id != FamilyId::A1 && id != FamilyId::A2 && id != FamilyId::B1 && id != FamilyId::B2) {
    throw UnsupportedFamily("product split applies to A1/A2/B1/B2 only");
  }
  ContactMetricStructure s = build_family(spec);
  BaseCurvature base = oneill_base_curvature(s.base, s.eta, s.xi, ONeillVariant::standard, tol);

  double mixed = 0.0;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      for (int u = 0; u < 4; ++u) {
        for (int v = 0; v < 4; ++v) {
          const int blocks[4] = {p / 2, q / 2, u / 2, v / 2};
          bool has0 = false, has1 = false;
          for (int blk : blocks) (blk == 0 ? has0 : has1) = true;
          if (has0 && has1) {
            mixed = std::max(mixed, std::abs(base.tensor(p, q, u, v)));
          }
        }
      }
    }
  }

  ProductSplitResult result;
  result.lambda = base.tensor(0, 1, 1, 0);
  result.mu = base.tensor(2, 3, 3, 2);

  double lambda_expected = 0.0;
  double mu_expected = 0.0;
  switch (id) {
    case FamilyId::A1: {
      const double c = spec.param("c");
      lambda_expected = -4.0 / (c * c);
      mu_expected = -2.0;
      break;
    }
    case FamilyId::A2: {
      const double a = spec.param("a"), b = spec.param("b");
      lambda_expected = -(a * a + b * b);
      mu_expected = -2.0;
      break;
    }
    case FamilyId::B1: {
      const double a = spec.param("a");
      lambda_expected = -a * a;
      mu_expected = 2.0;
      break;
    }
    default: {  // B2
      const double a = spec.param("a"), b = spec.param("b");
      lambda_expected = -(a * a + b * b);
      mu_expected = 2.0;
      break;
    }
  }

  result.report.subject = "product split " + to_string(id);
  result.report.add("mixed_components_vanish", mixed, tol.abs_tol);
  result.report.add("lambda_matches_closed_form", std::abs(result.lambda - lambda_expected),
                    10.0 * tol.abs_tol);
  result.report.add("mu_matches_closed_form", std::abs(result.mu - mu_expected),
                    10.0 * tol.abs_tol);
  return result;
}

SolvableModelData build_solvable_model(const FamilySpec& spec, const Tolerance& tol) {
  const FamilyId id = spec.id;
  if (id != FamilyId::A3 && id != FamilyId::A4 && id != FamilyId::B3 && id != FamilyId::B4) {
    throw UnsupportedFamily("solvable model applies to A3/A4/B3/B4 only");
  }
  ContactMetricStructure s = build_family(spec);
  const LieAlgebra& alg = s.base.algebra;
  const int dim = s.dim();

  SolvableModelData data{Matrix::Zero(dim, 4), LieAlgebra(4),      Matrix(),  Matrix(),
                         Vector::Zero(4),      Vector(),           Subspace::coordinate(4, {2, 3}),
                         Subspace::coordinate(4, {0}),             0.0,       Matrix::Zero(4, 4),
                         0.0};

  const bool two_param = id == FamilyId::A3 || id == FamilyId::B3;
  if (two_param) {
    const double a = spec.param("a");
    data.e.col(0) = a * Vector::Unit(dim, 0) + 2.0 * Vector::Unit(dim, 4);
    data.e.col(1) = (1.0 / a) * Vector::Unit(dim, 1);
    data.lambda = std::abs(a) / 2.0;
    data.a0 = std::abs(a) * Vector::Unit(4, 1);
  } else {
    const double a = spec.param("a"), b = spec.param("b");
    data.e.col(0) =
        a * Vector::Unit(dim, 0) + b * Vector::Unit(dim, 1) + 2.0 * Vector::Unit(dim, 4);
    data.e.col(1) = (1.0 / b) * Vector::Unit(dim, 0);
    data.lambda = 0.5 * std::sqrt(a * a + b * b);
    data.a0 = Vector::Zero(4);
    data.a0(0) = (a / b) / (2.0 * data.lambda);
    data.a0(1) = -(a * a + b * b) / (2.0 * data.lambda);
  }
  data.e.col(2) = Vector::Unit(dim, 2);
  data.e.col(3) = Vector::Unit(dim, 3);

  Subspace span(data.e, tol);
  auto [is_ideal_ok, ideal_res] = alg.is_ideal(span, tol);
  if (!is_ideal_ok) {
    throw StructureMismatch("solvable model basis does not span an ideal");
  }
  data.ideal_residual = ideal_res;

  // Brackets of the ideal in E-coordinates.
  Eigen::ColPivHouseholderQR<Matrix> e_qr(data.e);
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      data.ideal.set_bracket(p, q, e_qr.solve(alg.bracket(data.e.col(p), data.e.col(q))));
    }
  }

  // Transported metric: gbar(X, Y) = g(HX, HY), H the projection onto ker eta.
  auto horiz = [&](const Vector& v) -> Vector { return v - s.eta.dot(v) * s.xi; };
  data.gbar = Matrix(4, 4);
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      data.gbar(p, q) = s.base.inner(horiz(data.e.col(p)), horiz(data.e.col(q)));
    }
  }

  // Transported complex structure: J X = pi_s(phi X), projection along h.
  // The solve also certifies g = h (+) s: a dependent stack throws here.
  Matrix full(dim, dim);
  full.col(0) = s.xi;
  full.rightCols(4) = data.e;
  (void)Subspace(full, tol);
  Eigen::PartialPivLU<Matrix> full_lu(full);
  data.j = Matrix(4, 4);
  for (int q = 0; q < 4; ++q) {
    Vector c = full_lu.solve(s.phi * data.e.col(q));
    data.j.col(q) = c.tail(4);
  }

  data.ja0 = data.j * data.a0;
  data.a2 = Subspace(data.ja0, tol);

  // Skew derivation S0 on a1 + a2 (zero on R A0 and on J A0).
  double coef;
  if (two_param) {
    const double a = spec.param("a"), f = spec.param("f");
    coef = a * f / std::abs(a);
  } else {
    coef = 2.0 * data.lambda * spec.param("c") / spec.param("b");
  }
  data.s0(3, 2) = -coef;  // S0(E3) = -coef E4
  data.s0(2, 3) = coef;   // S0(E4) =  coef E3
  return data;
}

VerificationReport verify_heintze_relations(const SolvableModelData& data, const Tolerance& tol) {
  VerificationReport report("heintze solvable model relations");
  auto gnorm = [&](const Vector& v) { return std::sqrt(v.dot(data.gbar * v)); };
  auto gbar_inner = [&](const Vector& x, const Vector& y) { return x.dot(data.gbar * y); };
  const double lam = data.lambda;

  double a0_a1 = 0.0;
  for (int q = 0; q < data.a1.rank(); ++q) {
    const Vector x = data.a1.basis().col(q);
    a0_a1 = std::max(a0_a1,
                     gnorm(data.ideal.bracket(data.a0, x) - lam * x - data.s0 * x));
  }
  report.add("a0_bracket_on_a1", a0_a1, tol.abs_tol);

  report.add("a0_bracket_ja0",
             gnorm(data.ideal.bracket(data.a0, data.ja0) - 2.0 * lam * data.ja0), tol.abs_tol);

  double a1_pairs = 0.0;
  double a1_ja0 = 0.0;
  for (int p = 0; p < data.a1.rank(); ++p) {
    const Vector x = data.a1.basis().col(p);
    a1_ja0 = std::max(a1_ja0, gnorm(data.ideal.bracket(x, data.ja0)));
    for (int q = 0; q < data.a1.rank(); ++q) {
      const Vector y = data.a1.basis().col(q);
      a1_pairs = std::max(
          a1_pairs, gnorm(data.ideal.bracket(x, y) -
                          2.0 * lam * gbar_inner(data.j * x, y) * data.ja0));
    }
  }
  report.add("a1_brackets", a1_pairs, tol.abs_tol);
  report.add("a1_commutes_with_ja0", a1_ja0, tol.abs_tol);

  Matrix domain(4, 3);
  domain.leftCols(2) = data.a1.basis();
  domain.col(2) = data.ja0;
  double skew = 0.0;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      skew = std::max(skew, std::abs(gbar_inner(data.s0 * domain.col(p), domain.col(q)) +
                                     gbar_inner(domain.col(p), data.s0 * domain.col(q))));
    }
  }
  report.add("s0_skew_symmetric", skew, tol.abs_tol);
  report.add("s0_kills_ja0", gnorm(data.s0 * data.ja0), tol.abs_tol);

  double ortho = 0.0;
  for (int q = 0; q < data.a1.rank(); ++q) {
    const Vector x = data.a1.basis().col(q);
    ortho = std::max({ortho, std::abs(gbar_inner(data.a0, x)),
                      std::abs(gbar_inner(data.ja0, x))});
  }
  ortho = std::max(ortho, std::abs(gbar_inner(data.a0, data.ja0)));
  report.add("decomposition_gbar_orthogonal", ortho, tol.abs_tol);
  report.add("ideal_residual", data.ideal_residual, tol.abs_tol);

  return report;
}

namespace {

CurvatureTensor space_form_model(const Matrix& j, double last_term_sign) {
  const int h = static_cast<int>(j.rows());
  CurvatureTensor model(h);
  auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int p = 0; p < h; ++p) {
    for (int q = 0; q < h; ++q) {
      for (int u = 0; u < h; ++u) {
        for (int v = 0; v < h; ++v) {
          model.at(p, q, u, v) =
              0.25 * (kron(q, u) * kron(p, v) - kron(p, u) * kron(q, v) +
                      j(u, q) * j(v, p) - j(u, p) * j(v, q) +
                      last_term_sign * 2.0 * j(q, p) * j(v, u));
        }
      }
    }
  }
  return model;
}

double tensor_dot(const CurvatureTensor& a, const CurvatureTensor& b) {
  const int h = a.dim();
  double acc = 0.0;
  for (int p = 0; p < h; ++p) {
    for (int q = 0; q < h; ++q) {
      for (int u = 0; u < h; ++u) {
        for (int v = 0; v < h; ++v) acc += a(p, q, u, v) * b(p, q, u, v);
      }
    }
  }
  return acc;
}

}  // namespace

ModelFit fit_constant_holomorphic_model(const CurvatureTensor& tensor, const Matrix& j,
                                        const Tolerance& tol) {
  const int h = tensor.dim();
  if (j.rows() != h || j.cols() != h) throw DimensionMismatch("complex structure size != tensor");
  const double norm = tensor.frobenius_norm();
  ModelFit best;
  best.relative_residual = std::numeric_limits<double>::infinity();
  for (double sign : {-1.0, 1.0}) {
    CurvatureTensor model = space_form_model(j, sign);
    const double alpha = tensor_dot(tensor, model) / tensor_dot(model, model);
    double diff2 = 0.0;
    for (int p = 0; p < h; ++p) {
      for (int q = 0; q < h; ++q) {
        for (int u = 0; u < h; ++u) {
          for (int v = 0; v < h; ++v) {
            const double d = tensor(p, q, u, v) - alpha * model(p, q, u, v);
            diff2 += d * d;
          }
        }
      }
    }
    const double rel = std::sqrt(diff2) / norm;
    if (rel < best.relative_residual) {
      best = ModelFit{alpha, rel, sign};
    }
  }
  if (best.relative_residual > 10.0 * tol.rel_tol) {
    throw ModelMismatch("tensor does not fit a constant-holomorphic-curvature model");
  }
  return best;
}

SpaceFormFit verify_space_form_base(const FamilySpec& spec, std::uint64_t seed,
                                    const Tolerance& tol) {
  const FamilyId id = spec.id;
  if (id != FamilyId::A3 && id != FamilyId::A4 && id != FamilyId::B3 && id != FamilyId::B4) {
    throw UnsupportedFamily("space form base applies to A3/A4/B3/B4 only");
  }
  ContactMetricStructure s = build_family(spec);
  BaseCurvature base = oneill_base_curvature(s.base, s.eta, s.xi, ONeillVariant::standard, tol);
  const int h = base.tensor.dim();

  // Complex structure of the base in frame coordinates.
  Matrix j = base.frame.transpose() * s.base.gram * s.phi * base.frame;

  ModelFit model = fit_constant_holomorphic_model(base.tensor, j, tol);
  const double fit_tol = 10.0 * tol.rel_tol;
  const double best_alpha = model.alpha;

  SpaceFormFit fit;
  fit.alpha = best_alpha;
  fit.variant = model.variant_sign < 0.0 ? ONeillVariant::standard : ONeillVariant::flipped;
  fit.report.subject = "complex space form base " + to_string(id);
  fit.report.add("model_fit_relative_residual", model.relative_residual, fit_tol);
  fit.report.add_flag("alpha_negative", best_alpha < 0.0);

  std::mt19937_64 rng(seed);
  double k_min = std::numeric_limits<double>::infinity();
  double k_max = -std::numeric_limits<double>::infinity();
  double alpha_dev = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Vector x = random_unit_vector(rng, h);
    Vector jx = j * x;
    const double area2 = x.squaredNorm() * jx.squaredNorm() - std::pow(x.dot(jx), 2);
    const double k = base.tensor.evaluate(x, jx, jx, x) / area2;
    k_min = std::min(k_min, k);
    k_max = std::max(k_max, k);
    alpha_dev = std::max(alpha_dev, std::abs(k - best_alpha));
  }
  fit.report.add("holomorphic_sectional_spread", k_max - k_min, fit_tol);
  fit.report.add("holomorphic_matches_alpha", alpha_dev, fit_tol);
  return fit;
}

}  // namespace sasaki

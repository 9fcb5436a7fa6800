#include "sasaki/families.hpp"

#include <algorithm>
#include <cmath>

namespace sasaki {

namespace {

constexpr int kDim = 5;

Vector coeffs(std::initializer_list<std::pair<int, double>> terms) {
  Vector v = Vector::Zero(kDim);
  for (const auto& [idx, value] : terms) v(idx) = value;
  return v;
}

}  // namespace

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::A1: return "A1";
    case FamilyId::A2: return "A2";
    case FamilyId::A3: return "A3";
    case FamilyId::A4: return "A4";
    case FamilyId::B1: return "B1";
    case FamilyId::B2: return "B2";
    case FamilyId::B3: return "B3";
    case FamilyId::B4: return "B4";
  }
  throw InvalidParameter("unknown family id");
}

FamilyId parse_family_id(const std::string& text) {
  static const std::map<std::string, FamilyId> table = {
      {"A1", FamilyId::A1}, {"A2", FamilyId::A2}, {"A3", FamilyId::A3}, {"A4", FamilyId::A4},
      {"B1", FamilyId::B1}, {"B2", FamilyId::B2}, {"B3", FamilyId::B3}, {"B4", FamilyId::B4}};
  auto it = table.find(text);
  if (it == table.end()) throw InvalidParameter("unknown family '" + text + "'");
  return it->second;
}

double FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) {
    throw InvalidParameter("family " + to_string(id) + " requires parameter '" + name + "'");
  }
  return it->second;
}

void FamilySpec::validate() const {
  const std::vector<std::string> names = family_parameter_names(id);
  for (const std::string& name : names) param(name);
  for (const auto& [name, value] : params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw InvalidParameter("family " + to_string(id) + " does not take parameter '" + name +
                             "'");
    }
    if (!std::isfinite(value)) {
      throw InvalidParameter("parameter '" + name + "' must be finite");
    }
  }
  // Zero denominators in the bracket tables.
  switch (id) {
    case FamilyId::A1:
      if (param("c") == 0.0) throw InvalidParameter("A1 requires c != 0");
      break;
    case FamilyId::B1:
    case FamilyId::A3:
    case FamilyId::B3:
      if (param("a") == 0.0) throw InvalidParameter(to_string(id) + " requires a != 0");
      break;
    case FamilyId::A2:
    case FamilyId::A4:
    case FamilyId::B2:
    case FamilyId::B4:
      if (param("b") == 0.0) throw InvalidParameter(to_string(id) + " requires b != 0");
      break;
  }
}

FamilySpec make_spec(FamilyId id, std::initializer_list<std::pair<std::string, double>> params) {
  FamilySpec spec{id, {}};
  for (const auto& [name, value] : params) spec.params[name] = value;
  return spec;
}

std::vector<std::string> family_parameter_names(FamilyId id) {
  switch (id) {
    case FamilyId::A1: return {"c", "f"};
    case FamilyId::B1:
    case FamilyId::A3:
    case FamilyId::B3: return {"a", "f"};
    default: return {"a", "b", "c"};
  }
}

std::vector<double> default_parameter_grid() {
  return {-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0};
}

std::vector<FamilySpec> grid_specs(FamilyId id) {
  const std::vector<double> grid = default_parameter_grid();
  const std::vector<std::string> names = family_parameter_names(id);
  std::vector<FamilySpec> specs;
  std::vector<double> point(names.size());
  auto emit = [&]() {
    FamilySpec spec{id, {}};
    for (std::size_t p = 0; p < names.size(); ++p) spec.params[names[p]] = point[p];
    try {
      spec.validate();
    } catch (const InvalidParameter&) {
      return;
    }
    specs.push_back(std::move(spec));
  };
  if (names.size() == 2) {
    for (double x : grid) {
      for (double y : grid) {
        point = {x, y};
        emit();
      }
    }
  } else {
    for (double x : grid) {
      for (double y : grid) {
        for (double z : grid) {
          point = {x, y, z};
          emit();
        }
      }
    }
  }
  return specs;
}

namespace {

LieAlgebra family_algebra(const FamilySpec& spec) {
  LieAlgebra alg(kDim);
  switch (spec.id) {
    case FamilyId::A1: {
      const double c = spec.param("c"), f = spec.param("f");
      alg.set_bracket(0, 1, coeffs({{0, 2.0 / c}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, c}}));
      alg.set_bracket(0, 3, coeffs({{2, -c}}));
      alg.set_bracket(1, 2, coeffs({{3, -f}}));
      alg.set_bracket(1, 3, coeffs({{2, f}}));
      alg.set_bracket(2, 3, coeffs({{4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, -1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, 1.0}}));
      break;
    }
    case FamilyId::A2: {
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      const double k = (2.0 + a * c) / b;
      alg.set_bracket(0, 1, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, c}}));
      alg.set_bracket(0, 3, coeffs({{2, -c}}));
      alg.set_bracket(1, 2, coeffs({{3, -k}}));
      alg.set_bracket(1, 3, coeffs({{2, k}}));
      alg.set_bracket(2, 3, coeffs({{4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, -1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, 1.0}}));
      break;
    }
    case FamilyId::B1: {
      const double a = spec.param("a"), f = spec.param("f");
      alg.set_bracket(0, 1, coeffs({{0, -a}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, 2.0 / a}}));
      alg.set_bracket(0, 3, coeffs({{2, -2.0 / a}}));
      alg.set_bracket(1, 2, coeffs({{3, -f}}));
      alg.set_bracket(1, 3, coeffs({{2, f}}));
      alg.set_bracket(2, 3, coeffs({{4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, 1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, -1.0}}));
      break;
    }
    case FamilyId::B2: {
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      const double k = (a * c - 2.0) / b;
      alg.set_bracket(0, 1, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, c}}));
      alg.set_bracket(0, 3, coeffs({{2, -c}}));
      alg.set_bracket(1, 2, coeffs({{3, -k}}));
      alg.set_bracket(1, 3, coeffs({{2, k}}));
      alg.set_bracket(2, 3, coeffs({{4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, 1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, -1.0}}));
      break;
    }
    case FamilyId::A3: {
      const double a = spec.param("a"), f = spec.param("f");
      alg.set_bracket(0, 1, coeffs({{0, -a}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, -2.0 / a}}));
      alg.set_bracket(0, 3, coeffs({{2, 2.0 / a}}));
      alg.set_bracket(1, 2, coeffs({{2, a / 2.0}, {3, -f}}));
      alg.set_bracket(1, 3, coeffs({{2, f}, {3, a / 2.0}}));
      alg.set_bracket(2, 3, coeffs({{0, -a}, {4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, -1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, 1.0}}));
      break;
    }
    case FamilyId::A4: {
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      const double k = (2.0 + a * c) / b;
      alg.set_bracket(0, 1, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{2, -b / 2.0}, {3, c}}));
      alg.set_bracket(0, 3, coeffs({{2, -c}, {3, -b / 2.0}}));
      alg.set_bracket(1, 2, coeffs({{2, a / 2.0}, {3, -k}}));
      alg.set_bracket(1, 3, coeffs({{2, k}, {3, a / 2.0}}));
      alg.set_bracket(2, 3, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, -1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, 1.0}}));
      break;
    }
    case FamilyId::B3: {
      const double a = spec.param("a"), f = spec.param("f");
      alg.set_bracket(0, 1, coeffs({{0, -a}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{3, 2.0 / a}}));
      alg.set_bracket(0, 3, coeffs({{2, -2.0 / a}}));
      alg.set_bracket(1, 2, coeffs({{2, a / 2.0}, {3, -f}}));
      alg.set_bracket(1, 3, coeffs({{2, f}, {3, a / 2.0}}));
      alg.set_bracket(2, 3, coeffs({{0, -a}, {4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, 1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, -1.0}}));
      break;
    }
    case FamilyId::B4: {
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      const double k = (a * c - 2.0) / b;
      alg.set_bracket(0, 1, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(0, 2, coeffs({{2, -b / 2.0}, {3, c}}));
      alg.set_bracket(0, 3, coeffs({{2, -c}, {3, -b / 2.0}}));
      alg.set_bracket(1, 2, coeffs({{2, a / 2.0}, {3, -k}}));
      alg.set_bracket(1, 3, coeffs({{2, k}, {3, a / 2.0}}));
      alg.set_bracket(2, 3, coeffs({{0, -a}, {1, -b}, {4, -2.0}}));
      alg.set_bracket(2, 4, coeffs({{3, 1.0}}));
      alg.set_bracket(3, 4, coeffs({{2, -1.0}}));
      break;
    }
  }
  return alg;
}

Matrix standard_phi() {
  Matrix phi = Matrix::Zero(kDim, kDim);
  phi(1, 0) = -1.0;  // phi(e1) = -e2
  phi(0, 1) = 1.0;   // phi(e2) = e1
  phi(3, 2) = -1.0;  // phi(e3) = -e4
  phi(2, 3) = 1.0;   // phi(e4) = e3
  return phi;
}

}  // namespace

ContactMetricStructure build_family(const FamilySpec& spec) {
  spec.validate();
  LieAlgebra alg = family_algebra(spec);
  MetricLieAlgebra metric(std::move(alg), Matrix::Identity(kDim, kDim));
  return ContactMetricStructure{std::move(metric), standard_phi(), Vector::Unit(kDim, 4),
                                Vector::Unit(kDim, 4)};
}

FamilySpec a2_special_spec() {
  return make_spec(FamilyId::A2, {{"a", 0.0}, {"b", -std::sqrt(2.0)}, {"c", 0.0}});
}

ContactMetricStructure build_a2_special() { return build_family(a2_special_spec()); }

CorollaryScalars corollary_scalars(double invariant) {
  if (!(invariant < -1.0)) {
    throw InvariantOutOfRange("Boeckx invariant must satisfy I < -1");
  }
  const double ratio = (invariant - 1.0) / (invariant + 1.0);
  const double r = std::sqrt(ratio);
  return CorollaryScalars{-0.5 * (r + 1.0 / r), -(r - 1.0 / r) / std::sqrt(2.0)};
}

ContactMetricStructure build_corollary_model(const CorollarySpec& spec) {
  const auto [s, t] = corollary_scalars(spec.invariant);

  LieAlgebra alg(kDim);
  alg.set_bracket(0, 1, coeffs({{1, 1.0}}));
  alg.set_bracket(2, 3, coeffs({{4, -1.0}}));
  alg.set_bracket(2, 4, coeffs({{3, -2.0}}));
  alg.set_bracket(3, 4, coeffs({{2, 2.0}}));
  alg.set_labels({"E1", "E2", "E3", "E4", "E5"});

  Matrix phi(kDim, kDim);
  phi << 0.0, 2.0 * s, t, 0.0, 0.0,            //
      -0.5 * s, 0.0, 0.0, 0.5 * t, 0.0,        //
      0.5 * t, 0.0, 0.0, -s, 0.0,              //
      0.0, t, s, 0.0, 0.0,                     //
      0.5 * s, 0.0, 0.0, -0.5 * t, 0.0;

  Matrix gram(kDim, kDim);
  gram << -0.5 * s, 0.0, 0.0, 0.5 * t, 0.0,    //
      0.0, 4.0 - 2.0 * s, -t, 0.0, 4.0,        //
      0.0, -t, -s, 0.0, 0.0,                   //
      0.5 * t, 0.0, 0.0, -s, 0.0,              //
      0.0, 4.0, 0.0, 0.0, 4.0;

  if (!is_positive_definite(gram)) {
    throw NonPositiveDefinite("corollary model gram is not positive definite");
  }

  Vector eta = coeffs({{1, 2.0}, {4, 2.0}});
  Vector xi = coeffs({{4, 0.5}});
  return ContactMetricStructure{MetricLieAlgebra(std::move(alg), std::move(gram)),
                                std::move(phi), std::move(xi), std::move(eta)};
}

VerificationReport verify_witness_decomposition(const FamilySpec& spec, const Tolerance& tol) {
  spec.validate();
  const FamilyId id = spec.id;
  if (id != FamilyId::A1 && id != FamilyId::A2 && id != FamilyId::B1 && id != FamilyId::B2) {
    throw UnsupportedFamily("witness decomposition applies to A1/A2/B1/B2 only");
  }
  LieAlgebra alg = family_algebra(spec);

  Matrix aff(kDim, 2);
  switch (id) {
    case FamilyId::A1: {
      const double c = spec.param("c"), f = spec.param("f");
      aff.col(0) = coeffs({{0, f}, {1, c}});
      aff.col(1) = coeffs({{0, 1.0}, {4, -c}});
      break;
    }
    case FamilyId::A2: {
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      aff.col(0) = coeffs({{0, a}, {1, b}, {4, 2.0}});
      aff.col(1) = coeffs({{0, 1.0}, {4, -c}});
      break;
    }
    case FamilyId::B1: {
      const double a = spec.param("a"), f = spec.param("f");
      aff.col(0) = coeffs({{0, 1.0}, {4, 2.0 / a}});
      aff.col(1) = coeffs({{1, 1.0}, {4, -f}});
      break;
    }
    default: {  // B2
      const double a = spec.param("a"), b = spec.param("b"), c = spec.param("c");
      aff.col(0) = coeffs({{0, a}, {1, b}, {4, 2.0}});
      aff.col(1) = coeffs({{0, 1.0}, {4, c}});
      break;
    }
  }

  VerificationReport report("witness decomposition " + to_string(id));
  const Subspace aff_span(aff, tol);
  const Subspace factor = Subspace::coordinate(kDim, {2, 3, 4});

  auto [aff_closed, aff_res] = alg.is_subalgebra(aff_span, tol);
  report.add_flag("aff_is_subalgebra", aff_closed);
  report.add("aff_bracket_residual", aff_res, tol.pivot_threshold(1.0));

  double commute = 0.0;
  for (int p = 0; p < 2; ++p) {
    for (int q = 2; q < kDim; ++q) {
      commute = std::max(commute,
                         alg.bracket(aff.col(p), Vector::Unit(kDim, q)).cwiseAbs().maxCoeff());
    }
  }
  report.add("factors_commute", commute, tol.pivot_threshold(max_abs(aff)));

  Matrix stacked(kDim, kDim);
  stacked.leftCols(2) = aff;
  stacked.rightCols(3) = factor.basis();
  Eigen::JacobiSVD<Matrix> svd(stacked);
  report.add_flag("trivial_intersection",
                  svd.singularValues().minCoeff() > tol.pivot_threshold(max_abs(stacked)));

  auto [factor_closed, factor_res] = alg.is_subalgebra(factor, tol);
  report.add_flag("factor_is_subalgebra", factor_closed);
  report.add("factor_bracket_residual", factor_res, tol.pivot_threshold(1.0));

  const bool compact = id == FamilyId::B1 || id == FamilyId::B2;
  const double sign = compact ? 1.0 : -1.0;  // [e3,e5] = e4 for su(2), -e4 for sl(2,R)
  Vector sig1 = alg.bracket_basis(2, 3) + 2.0 * Vector::Unit(kDim, 4);
  Vector sig2 = alg.bracket_basis(2, 4) - sign * Vector::Unit(kDim, 3);
  report.add(compact ? "su2_signature" : "sl2_signature",
             std::max(sig1.cwiseAbs().maxCoeff(), sig2.cwiseAbs().maxCoeff()),
             tol.pivot_threshold(1.0));

  return report;
}

}  // namespace sasaki

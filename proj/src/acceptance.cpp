#include "sasaki/acceptance.hpp"

#include <chrono>
#include <cmath>

#include "sasaki/kmu.hpp"
#include "sasaki/parallel.hpp"
#include "sasaki/phisym.hpp"
#include "sasaki/sampling.hpp"

namespace sasaki {

namespace {

constexpr double kTol9 = 1e-9;
constexpr double kTol8 = 1e-8;
constexpr double kTol12 = 1e-12;

const std::vector<FamilyId> kAllFamilies = {FamilyId::A1, FamilyId::A2, FamilyId::A3,
                                            FamilyId::A4, FamilyId::B1, FamilyId::B2,
                                            FamilyId::B3, FamilyId::B4};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// max of fn over the family grid, evaluated data-parallel.
template <typename Fn>
double grid_max(const std::vector<FamilySpec>& specs, bool parallel, Fn&& fn) {
  std::vector<double> values(specs.size(), 0.0);
  parallel_for_index(specs.size(), parallel, [&](std::size_t i) { values[i] = fn(specs[i]); });
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, v);
  return worst;
}

CriterionResult criterion_family_validity(bool parallel) {
  CriterionResult result{1, "family validity on the sweep grid", VerificationReport()};
  const auto start = std::chrono::steady_clock::now();
  double jacobi = 0.0;
  double sasakian = 0.0;
  std::size_t points = 0;
  std::size_t min_per_family = SIZE_MAX;
  for (FamilyId id : kAllFamilies) {
    const std::vector<FamilySpec> specs = grid_specs(id);
    points += specs.size();
    min_per_family = std::min(min_per_family, specs.size());
    jacobi = std::max(jacobi, grid_max(specs, parallel, [](const FamilySpec& spec) {
                        return build_family(spec).base.algebra.jacobi_residual();
                      }));
    sasakian = std::max(sasakian, grid_max(specs, parallel, [](const FamilySpec& spec) {
                          return verify_sasakian(build_family(spec)).max_residual();
                        }));
  }
  result.report.add("max_jacobi_residual", jacobi, kTol9);
  result.report.add("max_sasakian_residual", sasakian, kTol9);
  result.report.add_flag("at_least_20_points_per_family", min_per_family >= 20);
  result.report.add("runtime_seconds", seconds_since(start), 5.0);
  result.report.subject += " (" + std::to_string(points) + " structures)";
  return result;
}

CriterionResult criterion_trivial_center(bool parallel) {
  CriterionResult result{2, "trivial center at every grid point", VerificationReport()};
  int worst_rank = 0;
  for (FamilyId id : kAllFamilies) {
    const std::vector<FamilySpec> specs = grid_specs(id);
    const double family_worst = grid_max(specs, parallel, [](const FamilySpec& spec) {
      return static_cast<double>(build_family(spec).base.algebra.center_rank());
    });
    worst_rank = std::max(worst_rank, static_cast<int>(family_worst));
  }
  result.report.add("max_center_rank", worst_rank, 0.0);
  return result;
}

CriterionResult criterion_u_operator(bool parallel) {
  CriterionResult result{3, "A1 U-operator table", VerificationReport()};
  const std::vector<FamilySpec> specs = grid_specs(FamilyId::A1);
  const double worst = grid_max(specs, parallel, [](const FamilySpec& spec) {
    ContactMetricStructure s = build_family(spec);
    ReductiveDecomposition split = ReductiveDecomposition::standard(s);
    const double c = spec.param("c");
    const double f = spec.param("f");
    const int n = 5;
    auto unit = [&](int i) { return Vector::Unit(n, i); };
    auto u = [&](int i, int j) { return u_operator(s.base, split, unit(i), unit(j)); };
    double w = 0.0;
    w = std::max(w, (u(2, 0) - 0.5 * c * unit(3)).norm());   // U(e3,e1) = c/2 e4
    w = std::max(w, (u(2, 1) + 0.5 * f * unit(3)).norm());   // U(e3,e2) = -f/2 e4
    w = std::max(w, u(2, 2).norm());                         // U(e3,e3) = 0
    w = std::max(w, u(2, 3).norm());                         // U(e3,e4) = 0
    w = std::max(w, u(3, 3).norm());                         // U(e4,e4) = 0
    w = std::max(w, (u(3, 0) + 0.5 * c * unit(2)).norm());   // U(e4,e1) = -c/2 e3
    w = std::max(w, (u(3, 1) - 0.5 * f * unit(2)).norm());   // U(e4,e2) = f/2 e3
    return w;
  });
  result.report.add("max_table_deviation", worst, kTol12);
  return result;
}

CriterionResult criterion_lemma_conditions(bool parallel) {
  CriterionResult result{4, "parallel-distribution lemma conditions", VerificationReport()};
  double worst = 0.0;
  for (FamilyId id : {FamilyId::A1, FamilyId::A2, FamilyId::B1, FamilyId::B2}) {
    const std::vector<FamilySpec> specs = grid_specs(id);
    worst = std::max(worst, grid_max(specs, parallel, [](const FamilySpec& spec) {
                       ContactMetricStructure s = build_family(spec);
                       ReductiveDecomposition split = ReductiveDecomposition::standard(s);
                       Subspace n2 = Subspace::coordinate(5, {2, 3});
                       return check_parallel_lemma(s.base, split, n2).max_residual();
                     }));
  }
  result.report.add("max_n2_condition_residual", worst, kTol9);

  const std::vector<FamilySpec> a1 = grid_specs(FamilyId::A1);
  std::vector<int> failed(a1.size(), 0);
  parallel_for_index(a1.size(), parallel, [&](std::size_t i) {
    ContactMetricStructure s = build_family(a1[i]);
    ReductiveDecomposition split = ReductiveDecomposition::standard(s);
    Subspace bad = Subspace::coordinate(5, {0, 2});
    failed[i] = check_parallel_lemma(s.base, split, bad).passed() ? 0 : 1;
  });
  bool all_failed = true;
  for (int f : failed) all_failed = all_failed && f == 1;
  result.report.add_flag("negative_control_fails_everywhere", all_failed);
  return result;
}

CriterionResult criterion_base_curvatures(bool parallel) {
  CriterionResult result{5, "product-split base curvatures", VerificationReport()};
  double mixed = 0.0;
  double closed_form = 0.0;
  for (FamilyId id : {FamilyId::A1, FamilyId::A2, FamilyId::B1, FamilyId::B2}) {
    const std::vector<FamilySpec> specs = grid_specs(id);
    std::vector<double> mixed_v(specs.size()), form_v(specs.size());
    parallel_for_index(specs.size(), parallel, [&](std::size_t i) {
      ProductSplitResult split = verify_product_split(specs[i]);
      mixed_v[i] = split.report.find("mixed_components_vanish")->residual;
      form_v[i] = std::max(split.report.find("lambda_matches_closed_form")->residual,
                           split.report.find("mu_matches_closed_form")->residual);
    });
    for (double v : mixed_v) mixed = std::max(mixed, v);
    for (double v : form_v) closed_form = std::max(closed_form, v);
  }
  result.report.add("max_mixed_component", mixed, kTol9);
  result.report.add("max_closed_form_deviation", closed_form, kTol8);
  return result;
}

CriterionResult criterion_solvable_models(std::uint64_t seed, bool parallel) {
  CriterionResult result{6, "solvable models and complex space form base", VerificationReport()};
  double heintze = 0.0;
  double fit = 0.0;
  double alpha_sign = -1.0;  // max alpha observed; must stay negative
  double counterpart = 0.0;
  for (FamilyId id : {FamilyId::A3, FamilyId::A4}) {
    const FamilyId twin = id == FamilyId::A3 ? FamilyId::B3 : FamilyId::B4;
    const std::vector<FamilySpec> specs = grid_specs(id);
    std::vector<double> h_v(specs.size()), f_v(specs.size()), a_v(specs.size()), c_v(specs.size());
    parallel_for_index(specs.size(), parallel, [&](std::size_t i) {
      const FamilySpec& spec = specs[i];
      SolvableModelData data = build_solvable_model(spec);
      h_v[i] = verify_heintze_relations(data).max_residual();
      SpaceFormFit primary = verify_space_form_base(spec, seed);
      FamilySpec twin_spec{twin, spec.params};
      SpaceFormFit mirrored = verify_space_form_base(twin_spec, seed);
      f_v[i] = std::max(primary.report.max_residual(), mirrored.report.max_residual());
      a_v[i] = std::max(primary.alpha, mirrored.alpha);
      c_v[i] = std::abs(primary.alpha - mirrored.alpha);
    });
    for (std::size_t i = 0; i < specs.size(); ++i) {
      heintze = std::max(heintze, h_v[i]);
      fit = std::max(fit, f_v[i]);
      alpha_sign = std::max(alpha_sign, a_v[i]);
      counterpart = std::max(counterpart, c_v[i]);
    }
    // Heintze relations of the B-side twins are exercised as well.
    const std::vector<FamilySpec> twin_specs = grid_specs(twin);
    heintze = std::max(heintze, grid_max(twin_specs, parallel, [](const FamilySpec& spec) {
                         return verify_heintze_relations(build_solvable_model(spec))
                             .max_residual();
                       }));
  }
  result.report.add("max_heintze_residual", heintze, kTol9);
  result.report.add("max_space_form_fit_residual", fit, kTol8);
  result.report.add_flag("alpha_negative_everywhere", alpha_sign < 0.0);
  result.report.add("max_alpha_deviation_B_vs_A", counterpart, kTol8);
  return result;
}

CriterionResult criterion_pang(bool) {
  CriterionResult result{7, "Pang invariants of the conjugate pair", VerificationReport()};
  ContactMetricStructure s = build_a2_special();
  auto [d_plus, d_minus] = conjugate_legendre_pair(s);
  double worst = 0.0;
  for (const Subspace* d : {&d_plus, &d_minus}) {
    Matrix pi = pang_invariant(s, *d);
    Matrix restricted = d->basis().transpose() * s.base.gram * d->basis();
    worst = std::max(worst, max_abs(pi + restricted));
  }
  result.report.add("max_entrywise_deviation_from_minus_g", worst, kTol12);
  return result;
}

CriterionResult criterion_kmu_family(bool parallel) {
  CriterionResult result{8, "(k,mu) deformation family", VerificationReport()};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> a_values = {1.1, 1.5, 2.0, 3.0, 5.0, 10.0};
  ContactMetricStructure base = build_a2_special();

  std::vector<double> contact_v(a_values.size()), res_v(a_values.size()), k_v(a_values.size()),
      i_v(a_values.size());
  std::vector<int> nonsasaki_v(a_values.size(), 0);
  parallel_for_index(a_values.size(), parallel, [&](std::size_t idx) {
    const double a = a_values[idx];
    KMuDeformation def = build_deformation(base, a);
    contact_v[idx] = verify_contact_metric(def.deformed).max_residual();
    KMuSolution sol = verify_kmu(def);
    res_v[idx] = sol.residual;
    const double k_expected = 1.0 - std::pow(a * a - 1.0, 2) / (16.0 * a * a);
    const double i_expected = -(a * a + 1.0) / (a * a - 1.0);
    k_v[idx] = std::abs(sol.k - k_expected);
    i_v[idx] = sol.boeckx ? std::abs(*sol.boeckx - i_expected) : 1.0;
    nonsasaki_v[idx] =
        (!verify_sasakian(def.deformed).passed() && sol.h_norm > 1e-6) ? 1 : 0;
  });

  double contact = 0.0, res = 0.0, kdev = 0.0, idev = 0.0;
  bool nonsasaki = true;
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    contact = std::max(contact, contact_v[i]);
    res = std::max(res, res_v[i]);
    kdev = std::max(kdev, k_v[i]);
    idev = std::max(idev, i_v[i]);
    nonsasaki = nonsasaki && nonsasaki_v[i] == 1;
  }
  result.report.add("max_contact_axiom_residual", contact, kTol9);
  result.report.add("max_kmu_equation_residual", res, kTol8);
  result.report.add("max_k_deviation", kdev, kTol9);
  result.report.add("max_boeckx_deviation", idev, kTol9);
  result.report.add_flag("deformed_structures_not_sasakian", nonsasaki);
  result.report.add("runtime_seconds", seconds_since(start), 1.0);
  return result;
}

CriterionResult criterion_corollary(bool parallel) {
  CriterionResult result{9, "corollary model roundtrip", VerificationReport()};
  const std::vector<double> invariants = {-1.05, -2.0, -5.0, -20.0};
  std::vector<double> axiom_v(invariants.size()), dev_v(invariants.size());
  parallel_for_index(invariants.size(), parallel, [&](std::size_t idx) {
    VerificationReport report = roundtrip_corollary(invariants[idx]);
    axiom_v[idx] = report.max_residual();
    dev_v[idx] = report.find("boeckx_matches_input")->residual;
  });
  double axioms = 0.0, dev = 0.0;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    axioms = std::max(axioms, axiom_v[i]);
    dev = std::max(dev, dev_v[i]);
  }
  result.report.add("max_roundtrip_residual", axioms, kTol8);
  result.report.add("max_boeckx_deviation", dev, kTol8);
  return result;
}

CriterionResult criterion_oracle_equivalence(std::uint64_t seed, bool parallel) {
  CriterionResult result{10, "O'Neill oracle equivalence", VerificationReport()};

  // Representative structures: each family on the {+-1, +-2} subgrid plus the
  // A2-special structure.
  std::vector<ContactMetricStructure> structures;
  const std::vector<double> subgrid = {-2.0, -1.0, 1.0, 2.0};
  for (FamilyId id : kAllFamilies) {
    const std::vector<std::string> names = family_parameter_names(id);
    std::vector<FamilySpec> specs;
    if (names.size() == 2) {
      for (double x : subgrid)
        for (double y : subgrid) specs.push_back(make_spec(id, {{names[0], x}, {names[1], y}}));
    } else {
      for (double x : subgrid)
        for (double y : subgrid)
          for (double z : subgrid)
            specs.push_back(make_spec(id, {{names[0], x}, {names[1], y}, {names[2], z}}));
    }
    for (const FamilySpec& spec : specs) structures.push_back(build_family(spec));
  }
  structures.push_back(build_a2_special());

  std::vector<double> dev(structures.size(), 0.0);
  parallel_for_index(structures.size(), parallel, [&](std::size_t idx) {
    const ContactMetricStructure& s = structures[idx];
    BaseCurvature base = oneill_base_curvature(s.base, s.eta, s.xi);
    CurvatureTensor total = curvature(s.base);
    const int h = base.tensor.dim();
    std::mt19937_64 rng(seed + idx);
    double worst = 0.0;
    for (int plane = 0; plane < 100; ++plane) {
      Vector xc = random_unit_vector(rng, h);
      Vector yc = random_unit_vector(rng, h);
      const double area2 = xc.squaredNorm() * yc.squaredNorm() - std::pow(xc.dot(yc), 2);
      if (area2 < 1e-6) continue;  // nearly collinear draw, no plane to compare
      const double full = base.tensor.evaluate(xc, yc, yc, xc) / area2;
      Vector x = base.frame * xc;
      Vector y = base.frame * yc;
      const double oracle = oneill_base_sectional(s.base, total, s.eta, s.xi, x, y);
      worst = std::max(worst, std::abs(full - oracle));
    }
    dev[idx] = worst;
  });
  double worst = 0.0;
  for (double v : dev) worst = std::max(worst, v);
  result.report.add("max_sectional_disagreement", worst, kTol9);
  result.report.subject += " (" + std::to_string(structures.size()) + " structures)";
  return result;
}

CriterionResult criterion_d_homothetic(bool) {
  CriterionResult result{11, "D-homothetic invariance of the Boeckx invariant",
                         VerificationReport()};
  ContactMetricStructure base = build_a2_special();
  KMuDeformation def = build_deformation(base, 2.0);
  KMuSolution reference = verify_kmu(def);
  double worst = 0.0;
  for (double t : {0.5, 2.0, 3.0}) {
    ContactMetricStructure rescaled = d_homothetic(def.deformed, t);
    KMuSolution sol = solve_k_mu(rescaled);
    if (!sol.boeckx || !reference.boeckx) {
      worst = 1.0;
      break;
    }
    worst = std::max(worst, std::abs(*sol.boeckx - *reference.boeckx));
  }
  result.report.add("max_boeckx_drift", worst, kTol8);
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool parallel) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_family_validity(parallel));
  results.push_back(criterion_trivial_center(parallel));
  results.push_back(criterion_u_operator(parallel));
  results.push_back(criterion_lemma_conditions(parallel));
  results.push_back(criterion_base_curvatures(parallel));
  results.push_back(criterion_solvable_models(seed, parallel));
  results.push_back(criterion_pang(parallel));
  results.push_back(criterion_kmu_family(parallel));
  results.push_back(criterion_corollary(parallel));
  results.push_back(criterion_oracle_equivalence(seed, parallel));
  results.push_back(criterion_d_homothetic(parallel));
  for (CriterionResult& r : results) {
    r.report.subject =
        "criterion " + std::to_string(r.index) + ": " + r.name + r.report.subject;
  }
  return results;
}

}  // namespace sasaki

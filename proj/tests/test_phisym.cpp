#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sasaki/phisym.hpp"
#include "sasaki/sampling.hpp"

using namespace sasaki;

namespace {

Vector random_horizontal(std::mt19937_64& rng) {
  Vector x = Vector::Zero(5);
  for (int i = 0; i < 4; ++i) x(i) = sample_gaussian(rng);
  return x;
}

}  // namespace

TEST_CASE("U operator reproduces the A1 table") {
  for (double c : {1.0, -2.0, 0.5}) {
    for (double f : {0.0, 1.0, -4.0}) {
      ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", c}, {"f", f}}));
      ReductiveDecomposition split = ReductiveDecomposition::standard(s);
      auto u = [&](int i, int j) {
        return u_operator(s.base, split, Vector::Unit(5, i), Vector::Unit(5, j));
      };
      CAPTURE(c);
      CAPTURE(f);
      CHECK((u(2, 0) - 0.5 * c * Vector::Unit(5, 3)).norm() < 1e-13);
      CHECK((u(2, 1) + 0.5 * f * Vector::Unit(5, 3)).norm() < 1e-13);
      CHECK(u(2, 2).norm() < 1e-13);
      CHECK(u(2, 3).norm() < 1e-13);
      CHECK((u(3, 0) + 0.5 * c * Vector::Unit(5, 2)).norm() < 1e-13);
      CHECK((u(3, 1) - 0.5 * f * Vector::Unit(5, 2)).norm() < 1e-13);
    }
  }
}

TEST_CASE("U is symmetric and satisfies its defining identity") {
  ContactMetricStructure s =
      build_family(make_spec(FamilyId::A4, {{"a", 1.0}, {"b", 2.0}, {"c", -1.0}}));
  ReductiveDecomposition split = ReductiveDecomposition::standard(s);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Vector x = random_horizontal(rng);
    Vector y = random_horizontal(rng);
    Vector uxy = u_operator(s.base, split, x, y);
    CHECK((uxy - u_operator(s.base, split, y, x)).norm() < 1e-12);
    for (int p = 0; p < split.m.rank(); ++p) {
      Vector z = split.m.basis().col(p);
      const double lhs = 2.0 * s.base.inner(uxy, z);
      const double rhs = s.base.inner(split.project_m(s.base.algebra.bracket(z, x)), y) +
                         s.base.inner(split.project_m(s.base.algebra.bracket(z, y)), x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(u_operator(s.base, split, s.xi, Vector::Unit(5, 0)), NotInM);
}

TEST_CASE("parallel lemma conditions hold for n2 and fail for the control") {
  for (FamilyId id : {FamilyId::A1, FamilyId::A2, FamilyId::B1, FamilyId::B2}) {
    std::vector<std::string> names = family_parameter_names(id);
    FamilySpec spec{id, {}};
    double value = 1.0;
    for (const std::string& name : names) spec.params[name] = value;
    ContactMetricStructure s = build_family(spec);
    ReductiveDecomposition split = ReductiveDecomposition::standard(s);
    CAPTURE(to_string(id));
    CHECK(check_parallel_lemma(s.base, split, Subspace::coordinate(5, {2, 3})).passed());
  }

  ContactMetricStructure a1 = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}}));
  ReductiveDecomposition split = ReductiveDecomposition::standard(a1);
  VerificationReport control =
      check_parallel_lemma(a1.base, split, Subspace::coordinate(5, {0, 2}));
  CHECK_FALSE(control.passed());
  CHECK_THROWS_AS(
      check_parallel_lemma(a1.base, split, Subspace::coordinate(5, {0, 4})), NotInM);
}

TEST_CASE("reductive connection") {
  ContactMetricStructure a1 = build_family(make_spec(FamilyId::A1, {{"c", 2.0}, {"f", 3.0}}));
  ReductiveDecomposition split = ReductiveDecomposition::standard(a1);
  CHECK(reductive_connection(a1.base, split, Vector::Unit(5, 2), Vector::Unit(5, 3)).norm() <
        1e-13);

  MetricLieAlgebra flat(LieAlgebra::abelian(5), Matrix::Identity(5, 5));
  Matrix xi_col = Matrix::Zero(5, 1);
  xi_col(4, 0) = 1.0;
  ReductiveDecomposition flat_split{Subspace(xi_col),
                                    Subspace::coordinate(5, {0, 1, 2, 3})};
  CHECK(reductive_connection(flat, flat_split, Vector::Unit(5, 0), Vector::Unit(5, 1)).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("when the lemma holds, the reductive connection preserves n") {
  for (FamilyId id : {FamilyId::A1, FamilyId::B2}) {
    std::vector<std::string> names = family_parameter_names(id);
    FamilySpec spec{id, {}};
    double value = 2.0;
    for (const std::string& name : names) spec.params[name] = value--;
    ContactMetricStructure s = build_family(spec);
    ReductiveDecomposition split = ReductiveDecomposition::standard(s);
    Subspace n2 = Subspace::coordinate(5, {2, 3});
    REQUIRE(check_parallel_lemma(s.base, split, n2).passed());
    for (int p = 0; p < split.m.rank(); ++p) {
      for (int q = 0; q < n2.rank(); ++q) {
        Vector cov = reductive_connection(s.base, split, split.m.basis().col(p),
                                          n2.basis().col(q));
        CHECK(n2.distance_to(cov) < 1e-9);
      }
    }
  }
}

TEST_CASE("product split values match the closed forms") {
  ProductSplitResult a1 = verify_product_split(make_spec(FamilyId::A1, {{"c", 2.0}, {"f", 1.0}}));
  CHECK(a1.report.passed());
  CHECK(a1.lambda == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(a1.mu == doctest::Approx(-2.0).epsilon(1e-10));

  ProductSplitResult b1 = verify_product_split(make_spec(FamilyId::B1, {{"a", 3.0}, {"f", 0.0}}));
  CHECK(b1.report.passed());
  CHECK(b1.lambda == doctest::Approx(-9.0).epsilon(1e-10));
  CHECK(b1.mu == doctest::Approx(2.0).epsilon(1e-10));

  ProductSplitResult b2 = verify_product_split(
      make_spec(FamilyId::B2, {{"a", 1.0}, {"b", 2.0}, {"c", 1.0}}));
  CHECK(b2.report.passed());
  CHECK(b2.lambda == doctest::Approx(-5.0).epsilon(1e-10));
  CHECK(b2.mu == doctest::Approx(2.0).epsilon(1e-10));

  CHECK_THROWS_AS(verify_product_split(make_spec(FamilyId::A3, {{"a", 1.0}, {"f", 0.0}})),
                  UnsupportedFamily);
}

TEST_CASE("solvable model data for A3 and A4") {
  SolvableModelData a3 = build_solvable_model(make_spec(FamilyId::A3, {{"a", 2.0}, {"f", 0.0}}));
  CHECK((a3.j.col(0) + 4.0 * Vector::Unit(4, 1)).norm() < 1e-13);   // J E1 = -a^2 E2
  CHECK((a3.j.col(1) - 0.25 * Vector::Unit(4, 0)).norm() < 1e-13);  // J E2 = E1/a^2
  CHECK((a3.j.col(2) + Vector::Unit(4, 3)).norm() < 1e-13);         // J E3 = -E4
  CHECK(a3.lambda == doctest::Approx(1.0));
  CHECK(a3.ideal_residual < 1e-12);

  const double a = 2.0, b = 0.5, c = 1.0;
  SolvableModelData a4 =
      build_solvable_model(make_spec(FamilyId::A4, {{"a", a}, {"b", b}, {"c", c}}));
  // J E1 = -(a/b) E1 + (a^2+b^2) E2 and J E2 = -(1/b^2) E1 + (a/b) E2.
  Vector je1(4), je2(4);
  je1 << -a / b, a * a + b * b, 0.0, 0.0;
  je2 << -1.0 / (b * b), a / b, 0.0, 0.0;
  CHECK((a4.j.col(0) - je1).norm() < 1e-12);
  CHECK((a4.j.col(1) - je2).norm() < 1e-12);
  CHECK(a4.lambda == doctest::Approx(0.5 * std::sqrt(a * a + b * b)));

  SolvableModelData a4_unit =
      build_solvable_model(make_spec(FamilyId::A4, {{"a", 1.0}, {"b", 1.0}, {"c", 0.0}}));
  CHECK(a4_unit.lambda == doctest::Approx(std::sqrt(0.5)));

  CHECK_THROWS_AS(build_solvable_model(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}})),
                  UnsupportedFamily);
}

TEST_CASE("heintze relations, including negative parameters") {
  SolvableModelData a3 = build_solvable_model(make_spec(FamilyId::A3, {{"a", 1.0}, {"f", 1.0}}));
  // S0(E3) = -(a f / |a|) E4 = -E4.
  CHECK((a3.s0 * Vector::Unit(4, 2) + Vector::Unit(4, 3)).norm() == doctest::Approx(0.0));
  CHECK(verify_heintze_relations(a3).passed());
  // [A0, JA0] = |a| JA0.
  Vector lhs = a3.ideal.bracket(a3.a0, a3.ja0);
  CHECK((lhs - 1.0 * a3.ja0).norm() < 1e-13);

  SolvableModelData a4 =
      build_solvable_model(make_spec(FamilyId::A4, {{"a", 0.0}, {"b", 2.0}, {"c", 1.0}}));
  // S0(E4) = 2 lambda (c/b) E3 = E3 here (lambda = 1).
  CHECK(a4.lambda == doctest::Approx(1.0));
  CHECK((a4.s0 * Vector::Unit(4, 3) - Vector::Unit(4, 2)).norm() < 1e-14);
  CHECK(verify_heintze_relations(a4).passed());

  for (FamilyId id : {FamilyId::A3, FamilyId::A4, FamilyId::B3, FamilyId::B4}) {
    std::vector<std::string> names = family_parameter_names(id);
    for (double first : {-2.0, -0.5, 1.0}) {
      FamilySpec spec{id, {}};
      spec.params[names[0]] = first;
      spec.params[names[1]] = 1.5;
      if (names.size() == 3) spec.params[names[2]] = -1.0;
      CAPTURE(to_string(id));
      CAPTURE(first);
      CHECK(verify_heintze_relations(build_solvable_model(spec)).passed());
    }
  }
}

TEST_CASE("space form base fit") {
  SpaceFormFit a3 = verify_space_form_base(make_spec(FamilyId::A3, {{"a", 1.0}, {"f", 0.0}}));
  CHECK(a3.report.passed());
  CHECK(a3.alpha < 0.0);

  SpaceFormFit b3 = verify_space_form_base(make_spec(FamilyId::B3, {{"a", 1.0}, {"f", 0.0}}));
  CHECK(b3.alpha == doctest::Approx(a3.alpha).epsilon(1e-10));

  SpaceFormFit a4 = verify_space_form_base(
      make_spec(FamilyId::A4, {{"a", 1.0}, {"b", 1.0}, {"c", 0.0}}));
  SpaceFormFit b4 = verify_space_form_base(
      make_spec(FamilyId::B4, {{"a", 1.0}, {"b", 1.0}, {"c", 0.0}}));
  CHECK(b4.alpha == doctest::Approx(a4.alpha).epsilon(1e-10));

  // f enters only the skew derivation; the base geometry must not move.
  SpaceFormFit a3f = verify_space_form_base(make_spec(FamilyId::A3, {{"a", 1.0}, {"f", 3.0}}));
  CHECK(a3f.alpha == doctest::Approx(a3.alpha).epsilon(1e-10));
}

TEST_CASE("product bases are not complex space forms") {
  // A1's base is CH^1(-4) x CH^1(-2); no single alpha fits either variant.
  ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}}));
  BaseCurvature base = oneill_base_curvature(s.base, s.eta, s.xi);
  Matrix j = base.frame.transpose() * s.base.gram * s.phi * base.frame;
  CHECK_THROWS_AS(fit_constant_holomorphic_model(base.tensor, j), ModelMismatch);

  // The A3 base itself fits, with the standard-sign model term.
  ContactMetricStructure a3 = build_family(make_spec(FamilyId::A3, {{"a", 2.0}, {"f", 1.0}}));
  BaseCurvature a3_base = oneill_base_curvature(a3.base, a3.eta, a3.xi);
  Matrix a3_j = a3_base.frame.transpose() * a3.base.gram * a3.phi * a3_base.frame;
  ModelFit fit = fit_constant_holomorphic_model(a3_base.tensor, a3_j);
  CHECK(fit.relative_residual < 1e-10);
  CHECK(fit.variant_sign == -1.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sasaki/families.hpp"
#include "sasaki/numlin.hpp"

using namespace sasaki;

TEST_CASE("A1 brackets at c=2, f=0") {
  ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", 2.0}, {"f", 0.0}}));
  const LieAlgebra& alg = s.base.algebra;
  CHECK((alg.bracket_basis(0, 1) - (Vector::Unit(5, 0) - 2.0 * Vector::Unit(5, 4))).norm() ==
        doctest::Approx(0.0));
  CHECK((alg.bracket_basis(0, 2) - 2.0 * Vector::Unit(5, 3)).norm() == doctest::Approx(0.0));
  CHECK((alg.bracket_basis(2, 3) + 2.0 * Vector::Unit(5, 4)).norm() == doctest::Approx(0.0));
}

TEST_CASE("B2 bracket cancels at ac = 2") {
  ContactMetricStructure s =
      build_family(make_spec(FamilyId::B2, {{"a", 1.0}, {"b", 1.0}, {"c", 2.0}}));
  CHECK(s.base.algebra.bracket_basis(1, 2).norm() == doctest::Approx(0.0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_family(make_spec(FamilyId::A1, {{"c", 0.0}, {"f", 1.0}})),
                  InvalidParameter);
  CHECK_THROWS_AS(build_family(make_spec(FamilyId::B3, {{"a", 0.0}, {"f", 1.0}})),
                  InvalidParameter);
  CHECK_THROWS_AS(build_family(make_spec(FamilyId::A4, {{"a", 1.0}, {"b", 0.0}, {"c", 1.0}})),
                  InvalidParameter);
  CHECK_THROWS_AS(build_family(make_spec(FamilyId::A1, {{"c", 1.0}})), InvalidParameter);
  CHECK_THROWS_AS(build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}, {"z", 1.0}})),
                  InvalidParameter);
}

TEST_CASE("phi completion on the standard frame") {
  ContactMetricStructure s = build_family(make_spec(FamilyId::B1, {{"a", 1.0}, {"f", 0.0}}));
  CHECK((s.phi * Vector::Unit(5, 0) + Vector::Unit(5, 1)).norm() == doctest::Approx(0.0));
  CHECK((s.phi * Vector::Unit(5, 1) - Vector::Unit(5, 0)).norm() == doctest::Approx(0.0));
  CHECK((s.phi * Vector::Unit(5, 2) + Vector::Unit(5, 3)).norm() == doctest::Approx(0.0));
  CHECK((s.phi * Vector::Unit(5, 3) - Vector::Unit(5, 2)).norm() == doctest::Approx(0.0));
  CHECK((s.phi * s.xi).norm() == doctest::Approx(0.0));
}

TEST_CASE("A2-special structure") {
  ContactMetricStructure s = build_a2_special();
  CHECK((s.base.algebra.bracket_basis(1, 2) - std::sqrt(2.0) * Vector::Unit(5, 3)).norm() <
        1e-15);
  CHECK((s.base.algebra.bracket_basis(2, 3) + 2.0 * Vector::Unit(5, 4)).norm() ==
        doctest::Approx(0.0));
  CHECK(s.base.algebra.center_rank() == 0);
  CHECK(verify_sasakian(s).passed());
}

TEST_CASE("grid specs cover the expected counts") {
  CHECK(grid_specs(FamilyId::A1).size() == 100);
  CHECK(grid_specs(FamilyId::B3).size() == 100);
  CHECK(grid_specs(FamilyId::A2).size() == 1000);
  for (const FamilySpec& spec : grid_specs(FamilyId::B4)) {
    CHECK(spec.param("b") != 0.0);
  }
}

TEST_CASE("family validity on a subgrid") {
  for (FamilyId id : {FamilyId::A1, FamilyId::A2, FamilyId::A3, FamilyId::A4, FamilyId::B1,
                      FamilyId::B2, FamilyId::B3, FamilyId::B4}) {
    const std::vector<std::string> names = family_parameter_names(id);
    for (double x : {-2.0, 1.0}) {
      for (double y : {-1.0, 2.0}) {
        FamilySpec spec{id, {}};
        spec.params[names[0]] = x;
        spec.params[names[1]] = y;
        if (names.size() == 3) spec.params[names[2]] = -0.5;
        ContactMetricStructure s = build_family(spec);
        CAPTURE(to_string(id));
        CAPTURE(x);
        CAPTURE(y);
        CHECK(s.base.algebra.jacobi_residual() < 1e-9);
        CHECK(verify_sasakian(s).passed());
        CHECK(s.base.algebra.center_rank() == 0);
      }
    }
  }
}

TEST_CASE("corollary scalars at I = -2") {
  CorollaryScalars scalars = corollary_scalars(-2.0);
  CHECK(scalars.s == doctest::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(scalars.t == doctest::Approx(-std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("corollary model at I = -2") {
  ContactMetricStructure s = build_corollary_model(CorollarySpec{-2.0});
  CHECK(s.eta.dot(s.xi) == doctest::Approx(1.0));
  const Vector e1 = Vector::Unit(5, 0), e2 = Vector::Unit(5, 1);
  const double deta12 = -0.5 * s.eta.dot(s.base.algebra.bracket(e1, e2));
  CHECK(deta12 == doctest::Approx(-1.0));
  CHECK(s.base.inner(e1, s.phi * e2) == doctest::Approx(-1.0));
  CHECK(verify_contact_metric(s).passed());

  // g(X, xi) = eta(X): solving the gram against eta recovers xi = E5/2.
  Vector xi = solve(s.base.gram, s.eta);
  CHECK((xi - s.xi).norm() < 1e-12);
}

TEST_CASE("corollary gram stays positive definite down to I = -1.01") {
  for (double invariant : {-1.01, -1.05, -2.0, -8.0, -50.0}) {
    ContactMetricStructure s = build_corollary_model(CorollarySpec{invariant});
    CHECK(is_positive_definite(s.base.gram));
  }
}

TEST_CASE("corollary rejects I >= -1") {
  CHECK_THROWS_AS(build_corollary_model(CorollarySpec{-1.0}), InvariantOutOfRange);
  CHECK_THROWS_AS(build_corollary_model(CorollarySpec{0.0}), InvariantOutOfRange);
  CHECK_THROWS_AS(corollary_scalars(-0.5), InvariantOutOfRange);
}

TEST_CASE("witness decompositions verify for A1/A2/B1/B2") {
  CHECK(verify_witness_decomposition(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 1.0}}))
            .passed());
  CHECK(verify_witness_decomposition(
            make_spec(FamilyId::A2, {{"a", 2.0}, {"b", -1.0}, {"c", 0.5}}))
            .passed());
  CHECK(verify_witness_decomposition(make_spec(FamilyId::B1, {{"a", 1.0}, {"f", 0.0}}))
            .passed());
  CHECK(verify_witness_decomposition(
            make_spec(FamilyId::B2, {{"a", -1.0}, {"b", 2.0}, {"c", 3.0}}))
            .passed());
  CHECK_THROWS_AS(
      verify_witness_decomposition(make_spec(FamilyId::A3, {{"a", 1.0}, {"f", 0.0}})),
      UnsupportedFamily);
}

TEST_CASE("A1 witness needs the e1 - c e5 sign to close") {
  // With the opposite sign the bracket [f e1 + c e2, e1 + c e5] leaves the span.
  ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 1.0}}));
  Matrix flipped(5, 2);
  flipped.col(0) = Vector::Unit(5, 0) + Vector::Unit(5, 1);
  flipped.col(1) = Vector::Unit(5, 0) + Vector::Unit(5, 4);
  CHECK_FALSE(s.base.algebra.is_subalgebra(Subspace(flipped)).first);

  Matrix corrected(5, 2);
  corrected.col(0) = Vector::Unit(5, 0) + Vector::Unit(5, 1);
  corrected.col(1) = Vector::Unit(5, 0) - Vector::Unit(5, 4);
  CHECK(s.base.algebra.is_subalgebra(Subspace(corrected)).first);
}

TEST_CASE("family id parsing") {
  CHECK(parse_family_id("A1") == FamilyId::A1);
  CHECK(parse_family_id("B4") == FamilyId::B4);
  CHECK(to_string(FamilyId::A3) == "A3");
  CHECK_THROWS_AS(parse_family_id("C1"), InvalidParameter);
}

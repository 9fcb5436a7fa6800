#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sasaki/contact.hpp"
#include "sasaki/families.hpp"
#include "sasaki/kmu.hpp"
#include "sasaki/sampling.hpp"

using namespace sasaki;

namespace {

ContactMetricStructure abelian_trivial() {
  // Standard almost contact tensors on the abelian algebra; not contact
  // metric (d eta = 0).
  ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}}));
  return ContactMetricStructure{
      MetricLieAlgebra(LieAlgebra::abelian(5), Matrix::Identity(5, 5)), s.phi, s.xi, s.eta};
}

Subspace d_plus_span() {
  Matrix basis(5, 2);
  basis.col(0) = Vector::Unit(5, 0) + Vector::Unit(5, 3);
  basis.col(1) = Vector::Unit(5, 1) + Vector::Unit(5, 2);
  return Subspace(basis);
}

}  // namespace

TEST_CASE("d_eta values") {
  ContactMetricStructure a1 = build_family(make_spec(FamilyId::A1, {{"c", 2.0}, {"f", 0.0}}));
  const Vector e1 = Vector::Unit(5, 0), e2 = Vector::Unit(5, 1);
  CHECK(d_eta(a1, e1, e2) == doctest::Approx(1.0));
  CHECK(d_eta(a1, e1, e2) ==
        doctest::Approx(a1.base.inner(e1, a1.phi * e2)));  // compatibility fixes the 1/2
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = random_unit_vector(rng, 5);
    CHECK(d_eta(a1, x, x) == doctest::Approx(0.0));
  }

  ContactMetricStructure model = build_corollary_model(CorollarySpec{-2.0});
  CHECK(d_eta(model, Vector::Unit(5, 0), Vector::Unit(5, 1)) == doctest::Approx(-1.0));
}

TEST_CASE("Nijenhuis tensor") {
  ContactMetricStructure special = build_a2_special();
  const Vector e1 = Vector::Unit(5, 0), e2 = Vector::Unit(5, 1);
  Vector n12 = nijenhuis_phi(special, e1, e2);
  Vector expected = -2.0 * d_eta(special, e1, e2) * special.xi;
  CHECK((n12 - expected).norm() < 1e-14);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = random_unit_vector(rng, 5);
    CHECK(nijenhuis_phi(special, x, x).norm() == doctest::Approx(0.0));
  }

  ContactMetricStructure flat = abelian_trivial();
  CHECK(nijenhuis_phi(flat, e1, e2).norm() == doctest::Approx(0.0));
}

TEST_CASE("contact metric axioms: catalog pass, corrupted gram fails, abelian fails") {
  CHECK(verify_contact_metric(build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 2.0}})))
            .passed());
  CHECK(verify_contact_metric(build_corollary_model(CorollarySpec{-2.0})).passed());

  ContactMetricStructure broken =
      build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 2.0}}));
  Matrix gram = broken.base.gram;
  gram(0, 0) = 2.0;
  broken.base = MetricLieAlgebra(broken.base.algebra, gram);
  VerificationReport report = verify_contact_metric(broken);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("metric_compatibility")->pass);

  VerificationReport trivial = verify_contact_metric(abelian_trivial());
  CHECK_FALSE(trivial.passed());
  CHECK_FALSE(trivial.find("d_eta_compatibility")->pass);
}

TEST_CASE("phi xi = 0 and eta o phi = 0 follow for every passing structure") {
  for (const ContactMetricStructure& s :
       {build_family(make_spec(FamilyId::B4, {{"a", 1.0}, {"b", 2.0}, {"c", -1.0}})),
        build_a2_special(), build_corollary_model(CorollarySpec{-3.0})}) {
    REQUIRE(verify_contact_metric(s).passed());
    CHECK((s.phi * s.xi).norm() < 1e-10);
    CHECK((s.eta.transpose() * s.phi).norm() < 1e-10);
  }
}

TEST_CASE("sasakian verification separates the catalog from the deformed metrics") {
  CHECK(verify_sasakian(build_family(make_spec(FamilyId::B3, {{"a", -2.0}, {"f", 0.5}})))
            .passed());

  KMuDeformation def = build_deformation(build_a2_special(), 2.0);
  VerificationReport report = verify_sasakian(def.deformed);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("normality")->pass);
  CHECK(verify_contact_metric(def.deformed).passed());

  CHECK_FALSE(verify_sasakian(abelian_trivial()).passed());
}

TEST_CASE("h tensor: zero for Sasakian, nonzero traceless symmetric for deformed") {
  ContactMetricStructure sasaki = build_a2_special();
  CHECK(h_tensor(sasaki).norm() < 1e-10);

  KMuDeformation def = build_deformation(sasaki, 2.0);
  const ContactMetricStructure& s = def.deformed;
  Matrix h = h_tensor(s);
  CHECK(endomorphism_norm(s.base, h) > 0.1);
  CHECK(std::abs(h.trace()) < 1e-10);
  CHECK((h * s.xi).norm() < 1e-12);
  // g-symmetric and anticommuting with phi.
  CHECK(max_abs(s.base.gram * h - h.transpose() * s.base.gram) < 1e-9);
  CHECK(max_abs(h * s.phi + s.phi * h) < 1e-9);
  // Nonzero eigenvalues of a (k,mu)-space come in +- sqrt(1-k) pairs.
  Eigen::EigenSolver<Matrix> eig(h);
  std::vector<double> nonzero;
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(eig.eigenvalues()(i).imag()) < 1e-10);
    if (std::abs(eig.eigenvalues()(i).real()) > 1e-10) {
      nonzero.push_back(eig.eigenvalues()(i).real());
    }
  }
  std::sort(nonzero.begin(), nonzero.end());
  REQUIRE(nonzero.size() == 4);
  CHECK(nonzero[0] == doctest::Approx(-3.0 / 8.0));
  CHECK(nonzero[3] == doctest::Approx(3.0 / 8.0));
  CHECK(nonzero[0] == doctest::Approx(-nonzero[3]));
}

TEST_CASE("solve_k_mu: Sasakian case has k = 1 and no mu") {
  for (const ContactMetricStructure& s :
       {build_family(make_spec(FamilyId::A1, {{"c", 0.5}, {"f", -1.0}})), build_a2_special()}) {
    KMuSolution sol = solve_k_mu(s);
    CHECK(sol.k == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(sol.mu.has_value());
    CHECK_FALSE(sol.boeckx.has_value());
    CHECK(sol.residual < 1e-12);
    CHECK(sol.h_norm < 1e-10);
  }
}

TEST_CASE("solve_k_mu: deformed structure at a = 2 hits the closed-form invariants") {
  KMuDeformation def = build_deformation(build_a2_special(), 2.0);
  KMuSolution sol = solve_k_mu(def.deformed);
  CHECK(sol.k == doctest::Approx(55.0 / 64.0).epsilon(1e-12));
  REQUIRE(sol.mu.has_value());
  CHECK(*sol.mu == doctest::Approx(13.0 / 4.0).epsilon(1e-12));
  REQUIRE(sol.boeckx.has_value());
  CHECK(*sol.boeckx == doctest::Approx(-5.0 / 3.0).epsilon(1e-12));
  CHECK(sol.residual < 1e-8);
}

TEST_CASE("solve_k_mu round-trips (k, mu) on structures satisfying the equation exactly") {
  for (double a : {1.5, 3.0}) {
    KMuDeformation def = build_deformation(build_a2_special(), a);
    KMuSolution sol = solve_k_mu(def.deformed);
    const double k_expected = 1.0 - std::pow(a * a - 1.0, 2) / (16.0 * a * a);
    const double mu_expected = 2.0 + (a * a + 1.0) / (2.0 * a);
    CHECK(sol.residual < 1e-8);
    CHECK(sol.k == doctest::Approx(k_expected).epsilon(1e-10));
    REQUIRE(sol.mu.has_value());
    CHECK(*sol.mu == doctest::Approx(mu_expected).epsilon(1e-10));
  }
  for (double invariant : {-1.5, -4.0}) {
    KMuSolution sol = solve_k_mu(build_corollary_model(CorollarySpec{invariant}));
    CHECK(sol.residual < 1e-8);
    REQUIRE(sol.boeckx.has_value());
    CHECK(*sol.boeckx == doctest::Approx(invariant).epsilon(1e-10));
  }
  CHECK_THROWS_AS(solve_k_mu(abelian_trivial()), NotContactMetric);
}

TEST_CASE("boeckx invariant closed forms") {
  CHECK(boeckx_invariant(0.0, 0.0) == doctest::Approx(1.0));
  CHECK(boeckx_invariant(55.0 / 64.0, 13.0 / 4.0) == doctest::Approx(-5.0 / 3.0));
  CHECK(boeckx_invariant(0.75, 2.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(boeckx_invariant(1.0, 0.0), KNotLessThanOne);
}

TEST_CASE("boeckx invariant is fixed by the D-homothetic (k, mu) transform") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const double k = 1.0 - std::exp(sample_gaussian(rng));  // < 1
    const double mu = 3.0 * sample_gaussian(rng);
    const double a = std::exp(sample_gaussian(rng));  // > 0
    const double k2 = (k + a * a - 1.0) / (a * a);
    const double mu2 = (mu + 2.0 * a - 2.0) / a;
    CHECK(boeckx_invariant(k2, mu2) ==
          doctest::Approx(boeckx_invariant(k, mu)).epsilon(1e-10));
  }
}

TEST_CASE("D-homothetic deformation") {
  ContactMetricStructure s = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}}));
  ContactMetricStructure same = d_homothetic(s, 1.0);
  CHECK(max_abs(same.base.gram - s.base.gram) == doctest::Approx(0.0));
  CHECK((same.eta - s.eta).norm() == doctest::Approx(0.0));

  for (double a : {0.5, 2.0, 7.0}) {
    ContactMetricStructure scaled = d_homothetic(s, a);
    CHECK(scaled.eta.dot(scaled.xi) == doctest::Approx(1.0));
    CHECK(verify_sasakian(scaled).passed());
  }
  CHECK_THROWS_AS(d_homothetic(s, 0.0), NonPositiveParameter);
  CHECK_THROWS_AS(d_homothetic(s, -2.0), NonPositiveParameter);
}

TEST_CASE("recover_phi") {
  ContactMetricStructure a1 = build_family(make_spec(FamilyId::A1, {{"c", 3.0}, {"f", 1.0}}));
  CHECK(max_abs(recover_phi(a1.base, a1.eta) - a1.phi) < 1e-13);

  MetricLieAlgebra flat(LieAlgebra::abelian(5), Matrix::Identity(5, 5));
  CHECK(recover_phi(flat, Vector::Unit(5, 4)).norm() == doctest::Approx(0.0));

  // Deformed metric: phi_a = (1/a) phi on d_plus and a phi on d_minus.
  const double a = 2.0;
  ContactMetricStructure special = build_a2_special();
  KMuDeformation def = build_deformation(special, a);
  Matrix phi_a = recover_phi(def.deformed.base, def.deformed.eta);
  CHECK(max_abs(phi_a - def.deformed.phi) < 1e-13);
  for (int p = 0; p < 2; ++p) {
    Vector x = def.d_plus.basis().col(p);
    CHECK((phi_a * x - (1.0 / a) * (special.phi * x)).norm() < 1e-12);
    Vector v = def.d_minus.basis().col(p);
    CHECK((phi_a * v - a * (special.phi * v)).norm() < 1e-12);
  }
}

TEST_CASE("pang invariant") {
  ContactMetricStructure special = build_a2_special();
  Subspace d_plus = d_plus_span();
  Matrix pi = pang_invariant(special, d_plus);
  Matrix expected = -d_plus.basis().transpose() * special.base.gram * d_plus.basis();
  CHECK(max_abs(pi - expected) < 1e-14);

  // [xi, X] = 0 forces Pi = 0.
  ContactMetricStructure flat = abelian_trivial();
  CHECK(pang_invariant(flat, Subspace::coordinate(5, {0, 1})).norm() ==
        doctest::Approx(0.0));

  CHECK_THROWS_AS(pang_invariant(special, Subspace::coordinate(5, {0, 4})),
                  NotLegendreCandidate);
}

TEST_CASE("legendre predicate") {
  ContactMetricStructure special = build_a2_special();
  CHECK(is_legendre(special, d_plus_span()).first);

  auto [ok, report] = is_legendre(special, Subspace::coordinate(5, {0, 1}));
  CHECK_FALSE(ok);
  CHECK_FALSE(report.find("d_eta_vanishes")->pass);

  auto [ok2, report2] = is_legendre(special, Subspace::coordinate(5, {4, 0}));
  CHECK_FALSE(ok2);
  CHECK_FALSE(report2.find("eta_vanishes")->pass);
}

TEST_CASE("totally geodesic subalgebras") {
  ContactMetricStructure special = build_a2_special();
  CHECK(is_totally_geodesic(special, d_plus_span()).first);

  ContactMetricStructure a1 = build_family(make_spec(FamilyId::A1, {{"c", 1.0}, {"f", 0.0}}));
  auto [geodesic, residual] = is_totally_geodesic(a1, Subspace::coordinate(5, {0, 1}));
  // nabla_{e1} e2 = 2 e1 - e5 leaves the span; cross-check by direct Koszul.
  Connection conn = levi_civita(a1.base);
  Vector cov = conn.covariant(Vector::Unit(5, 0), Vector::Unit(5, 1));
  CHECK((cov - (2.0 * Vector::Unit(5, 0) - Vector::Unit(5, 4))).norm() < 1e-13);
  CHECK_FALSE(geodesic);
  CHECK(residual == doctest::Approx(1.0));
}

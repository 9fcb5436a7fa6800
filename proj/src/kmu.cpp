#include "sasaki/kmu.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/parallel.hpp"

namespace sasaki {

std::pair<Subspace, Subspace> conjugate_legendre_pair(const ContactMetricStructure& s,
                                                      const Tolerance& tol) {
  const int n = s.dim();
  if (n != 5) throw StructureMismatch("conjugate pair is defined on the A2-special structure");

  Matrix plus(n, 2), minus(n, 2);
  plus.col(0) = Vector::Unit(n, 0) + Vector::Unit(n, 3);   // e1 + e4
  plus.col(1) = Vector::Unit(n, 1) + Vector::Unit(n, 2);   // e2 + e3
  minus.col(0) = Vector::Unit(n, 2) - Vector::Unit(n, 1);  // e3 - e2
  minus.col(1) = Vector::Unit(n, 0) - Vector::Unit(n, 3);  // e1 - e4

  Subspace d_plus(plus, tol);
  Subspace d_minus(minus, tol);

  for (const Subspace* d : {&d_plus, &d_minus}) {
    auto [legendre, legendre_report] = is_legendre(s, *d, tol);
    if (!legendre) throw StructureMismatch("distribution is not Legendre");
    auto [geodesic, res] = is_totally_geodesic(s, *d, tol);
    if (!geodesic) {
      throw StructureMismatch("distribution is not totally geodesic (residual " +
                              std::to_string(res) + ")");
    }
  }

  // Mutually orthogonal, and both orthogonal to xi.
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      if (std::abs(s.base.inner(plus.col(p), minus.col(q))) > tol.abs_tol) {
        throw StructureMismatch("d_plus and d_minus are not orthogonal");
      }
    }
    if (std::abs(s.base.inner(plus.col(p), s.xi)) > tol.abs_tol ||
        std::abs(s.base.inner(minus.col(p), s.xi)) > tol.abs_tol) {
      throw StructureMismatch("distribution is not orthogonal to xi");
    }
  }

  // phi maps d_plus onto d_minus.
  Matrix image(n, 2);
  image.col(0) = s.phi * plus.col(0);
  image.col(1) = s.phi * plus.col(1);
  if (subspace_distance(Subspace(image, tol), d_minus) > tol.abs_tol) {
    throw StructureMismatch("phi does not map d_plus onto d_minus");
  }

  // Pang invariants must equal -g restricted.
  for (const Subspace* d : {&d_plus, &d_minus}) {
    Matrix pi = pang_invariant(s, *d, tol);
    Matrix restricted = d->basis().transpose() * s.base.gram * d->basis();
    if (max_abs(pi + restricted) > tol.abs_tol) {
      throw StructureMismatch("Pang invariant differs from -g");
    }
  }

  return {std::move(d_plus), std::move(d_minus)};
}

KMuDeformation build_deformation(const ContactMetricStructure& s, double a,
                                 const Tolerance& tol) {
  if (a < 1.0) throw ParameterOutOfRange("deformation requires a >= 1");
  auto [d_plus, d_minus] = conjugate_legendre_pair(s, tol);

  // Blockwise gram: (1/a) g on d_plus, a g on d_minus, eta (x) eta otherwise.
  // P+- are g-orthogonal projectors; the adapted frame is g-orthogonal so the
  // three blocks assemble additively.
  Matrix proj_plus = gram_projector(d_plus.basis(), s.base.gram, tol);
  Matrix proj_minus = gram_projector(d_minus.basis(), s.base.gram, tol);
  Matrix gram = (1.0 / a) * proj_plus.transpose() * s.base.gram * proj_plus +
                a * proj_minus.transpose() * s.base.gram * proj_minus +
                s.eta * s.eta.transpose();

  MetricLieAlgebra metric(s.base.algebra, std::move(gram), tol);
  Matrix phi_a = recover_phi(metric, s.eta, tol);
  ContactMetricStructure deformed{std::move(metric), std::move(phi_a), s.xi, s.eta};
  return KMuDeformation{s, std::move(d_plus), std::move(d_minus), a, std::move(deformed)};
}

KMuSolution verify_kmu(const KMuDeformation& deformation, const Tolerance& tol) {
  return solve_k_mu(deformation.deformed, tol);
}

bool SweepResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass; });
}

SweepResult kmu_sweep(const std::vector<double>& a_values, const Tolerance& tol, bool parallel) {
  SweepResult result;
  result.rows.resize(a_values.size());
  ContactMetricStructure base = build_a2_special();

  parallel_for_index(a_values.size(), parallel, [&](std::size_t idx) {
    SweepRow& row = result.rows[idx];
    row.a = a_values[idx];
    try {
      if (!(row.a > 1.0)) throw ParameterOutOfRange("sweep requires a > 1");
      KMuDeformation def = build_deformation(base, row.a, tol);
      row.contact_residual = verify_contact_metric(def.deformed, tol).max_residual();
      KMuSolution sol = verify_kmu(def, tol);
      row.k = sol.k;
      row.mu = sol.mu;
      row.boeckx = sol.boeckx;
      row.kmu_residual = sol.residual;
      const double k_expected = 1.0 - std::pow(row.a * row.a - 1.0, 2) / (16.0 * row.a * row.a);
      const double i_expected = -(row.a * row.a + 1.0) / (row.a * row.a - 1.0);
      row.pass = row.contact_residual <= tol.abs_tol && row.kmu_residual <= 10.0 * tol.abs_tol &&
                 std::abs(row.k - k_expected) <= tol.abs_tol && row.boeckx.has_value() &&
                 std::abs(*row.boeckx - i_expected) <= tol.abs_tol;
    } catch (const Error& e) {
      row.error = e.what();
      row.pass = false;
    }
  });

  // I must increase strictly toward -1 along increasing a.
  std::vector<const SweepRow*> verified;
  for (const SweepRow& row : result.rows) {
    if (row.boeckx) verified.push_back(&row);
  }
  std::sort(verified.begin(), verified.end(),
            [](const SweepRow* x, const SweepRow* y) { return x->a < y->a; });
  result.invariant_monotone = true;
  for (std::size_t i = 1; i < verified.size(); ++i) {
    if (!(*verified[i]->boeckx > *verified[i - 1]->boeckx) || !(*verified[i]->boeckx < -1.0)) {
      result.invariant_monotone = false;
    }
  }
  return result;
}

VerificationReport roundtrip_corollary(double invariant, const Tolerance& tol) {
  if (!(invariant < -1.0)) {
    throw InvariantOutOfRange("Boeckx invariant must satisfy I < -1");
  }
  ContactMetricStructure model = build_corollary_model(CorollarySpec{invariant});
  VerificationReport report("corollary model roundtrip");
  report.append(verify_contact_metric(model, tol));
  KMuSolution sol = solve_k_mu(model, tol);
  report.add("kmu_equation_residual", sol.residual, 10.0 * tol.abs_tol);
  report.add_flag("boeckx_defined", sol.boeckx.has_value());
  if (sol.boeckx) {
    report.add("boeckx_matches_input", std::abs(*sol.boeckx - invariant), 10.0 * tol.abs_tol);
  }
  return report;
}

}  // namespace sasaki

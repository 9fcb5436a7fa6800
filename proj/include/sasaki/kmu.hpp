#pragma once

#include "sasaki/families.hpp"

namespace sasaki {

/// Conjugate pair of totally geodesic Legendre subalgebras of the A2-special
/// structure: d_plus = span{e1+e4, e2+e3}, d_minus = span{e3-e2, e1-e4}.
/// Every postcondition (Legendre, totally geodesic, phi-conjugacy, Pang
/// invariants = -g) is re-verified; StructureMismatch on failure.
std::pair<Subspace, Subspace> conjugate_legendre_pair(const ContactMetricStructure& s,
                                                      const Tolerance& tol = {});

struct KMuDeformation {
  ContactMetricStructure base;
  Subspace d_plus;
  Subspace d_minus;
  double a;
  ContactMetricStructure deformed;
};

/// Deformed metric g_a = (1/a) g on d_plus, a g on d_minus, eta (x) eta
/// otherwise; phi_a recovered from (g_a, eta). Requires a >= 1 (a = 1 is the
/// undeformed boundary, kept for testing).
KMuDeformation build_deformation(const ContactMetricStructure& s, double a,
                                 const Tolerance& tol = {});

/// solve_k_mu on the deformed structure.
KMuSolution verify_kmu(const KMuDeformation& deformation, const Tolerance& tol = {});

struct SweepRow {
  double a = 0.0;
  double k = 0.0;
  std::optional<double> mu;
  std::optional<double> boeckx;
  double kmu_residual = 0.0;
  double contact_residual = 0.0;
  bool pass = false;
  std::string error;  // non-empty when the row failed to build or verify
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool invariant_monotone = false;  // I strictly increasing in a toward -1

  bool all_pass() const;
};

/// One verified row per deformation parameter. Per-row errors are collected,
/// not fatal. Rows are reported in input order.
SweepResult kmu_sweep(const std::vector<double>& a_values, const Tolerance& tol = {},
                      bool parallel = false);

/// Builds the Corollary model for invariant I, solves (k, mu) and checks the
/// computed Boeckx invariant comes back to I.
VerificationReport roundtrip_corollary(double invariant, const Tolerance& tol = {});

}  // namespace sasaki

#pragma once

#include <map>
#include <string>
#include <vector>

#include "sasaki/contact.hpp"

namespace sasaki {

enum class FamilyId { A1, A2, A3, A4, B1, B2, B3, B4 };

std::string to_string(FamilyId id);
FamilyId parse_family_id(const std::string& text);

/// One of the eight bracket-table families with its parameter values.
/// A1 uses (c, f); B1/A3/B3 use (a, f); A2/B2/A4/B4 use (a, b, c).
struct FamilySpec {
  FamilyId id;
  std::map<std::string, double> params;

  double param(const std::string& name) const;
  /// Throws InvalidParameter on missing/extraneous params or zero denominators.
  void validate() const;
};

FamilySpec make_spec(FamilyId id, std::initializer_list<std::pair<std::string, double>> params);

/// Names of the free parameters of a family, in canonical order.
std::vector<std::string> family_parameter_names(FamilyId id);

/// Standard sweep grid {±0.25, ±0.5, ±1, ±2, ±4} per free parameter; specs
/// whose invariants fail are skipped.
std::vector<double> default_parameter_grid();
std::vector<FamilySpec> grid_specs(FamilyId id);

/// Builds the family structure in the standard frame: identity gram,
/// ker eta = span{e1..e4}, xi = e5, phi(e1) = -e2, phi(e3) = -e4 (completed
/// by phi(e2) = e1, phi(e4) = e3, phi(xi) = 0).
ContactMetricStructure build_family(const FamilySpec& spec);

/// The A2 structure at c = a = 0, b = -sqrt(2) used by the (k,mu) construction.
ContactMetricStructure build_a2_special();

FamilySpec a2_special_spec();

/// The sl(2,R) x aff(R) model realizing a prescribed Boeckx invariant I < -1.
struct CorollarySpec {
  double invariant;
};

struct CorollaryScalars {
  double s;
  double t;
};

CorollaryScalars corollary_scalars(double invariant);

ContactMetricStructure build_corollary_model(const CorollarySpec& spec);

/// Verifies the direct-product witnesses of A1/A2/B1/B2: the aff(R) span is a
/// subalgebra commuting with span{e3,e4,e5}, the two intersect trivially, and
/// span{e3,e4,e5} closes with the sl(2,R) (A) or su(2) (B) bracket signature.
VerificationReport verify_witness_decomposition(const FamilySpec& spec,
                                                const Tolerance& tol = {});

}  // namespace sasaki

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sasaki/contact.hpp"
#include "sasaki/kmu.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

using Json = nlohmann::ordered_json;

/// JSON format for user-defined algebras (1-based indices):
/// {"dim": n, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": 2.0, "5": -2.0}}, ...]}
/// Unlisted pairs are zero. Throws JsonFormatError on malformed input.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& algebra);

/// Optional contact extension of the algebra format under the keys
/// "gram" (matrix), "phi" (matrix), "xi" (vector), "eta" (covector).
struct ParsedStructure {
  LieAlgebra algebra;
  std::optional<ContactMetricStructure> contact;  // present when all four keys are given
};

ParsedStructure structure_from_json(const Json& j, const Tolerance& tol = {});
ParsedStructure structure_from_file(const std::string& path, const Tolerance& tol = {});

/// Report schema: {"subject": str, "checks": [{"name", "residual", "tol",
/// "pass"}], "elapsed_ms": float}. elapsed_ms is emitted as 0.0 so identical
/// inputs produce byte-identical JSON; real timing goes to the text format.
Json report_to_json(const VerificationReport& report);

Json sweep_to_json(const SweepResult& sweep);
std::string sweep_to_text(const SweepResult& sweep);

}  // namespace sasaki

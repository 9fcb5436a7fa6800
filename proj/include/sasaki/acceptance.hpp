#pragma once

#include <cstdint>

#include "sasaki/report.hpp"

namespace sasaki {

struct CriterionResult {
  int index = 0;
  std::string name;
  VerificationReport report;
};

/// Runs the full acceptance suite (one report per criterion, tolerances
/// pinned in code). The seed drives the randomized plane sampling.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, bool parallel = false);

}  // namespace sasaki

#pragma once

#include <string>
#include <vector>

namespace sasaki {

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Named residual checks against tolerances; the output currency of every
/// verification routine.
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  VerificationReport() = default;
  explicit VerificationReport(std::string subj) : subject(std::move(subj)) {}

  /// pass is derived: residual <= tol.
  void add(const std::string& name, double residual, double tol);
  /// Boolean check encoded as residual 0/1 against tol 0.5.
  void add_flag(const std::string& name, bool ok);
  void append(const VerificationReport& other, const std::string& prefix = "");

  bool passed() const;
  double max_residual() const;
  const Check* find(const std::string& name) const;
};

std::string report_to_text(const VerificationReport& report, bool include_timing = true);

}  // namespace sasaki

#include "sasaki/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sasaki {

void VerificationReport::add(const std::string& name, double residual, double tol) {
  checks.push_back({name, residual, tol, residual <= tol});
}

void VerificationReport::add_flag(const std::string& name, bool ok) {
  checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) {
    checks.push_back({prefix.empty() ? c.name : prefix + c.name, c.residual, c.tol, c.pass});
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const Check& c : checks) m = std::max(m, c.residual);
  return m;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string report_to_text(const VerificationReport& report, bool include_timing) {
  std::ostringstream out;
  out << "subject: " << report.subject << "\n";
  std::size_t width = 4;
  for (const Check& c : report.checks) width = std::max(width, c.name.size());
  for (const Check& c : report.checks) {
    char buf[64];
    // 3 significant digits for human output; JSON carries full precision.
    std::snprintf(buf, sizeof(buf), "%.2e  (tol %.2e)", c.residual, c.tol);
    out << "  " << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
    out << std::string(width - c.name.size() + 2, ' ') << buf << "\n";
  }
  if (include_timing) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", report.elapsed_ms);
    out << "  elapsed_ms: " << buf << "\n";
  }
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace sasaki

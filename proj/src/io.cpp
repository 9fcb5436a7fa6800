#include "sasaki/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace sasaki {

namespace {

Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw JsonFormatError("'" + key + "' must be an array of " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw JsonFormatError("'" + key + "' rows must have " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number()) throw JsonFormatError("'" + key + "' entries must be numbers");
      m(r, c) = row[c].get<double>();
    }
  }
  if (!m.allFinite()) throw JsonFormatError("'" + key + "' entries must be finite");
  return m;
}

Vector vector_from_json(const Json& j, int n, const std::string& key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw JsonFormatError("'" + key + "' must be an array of " + std::to_string(n) + " numbers");
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw JsonFormatError("'" + key + "' entries must be numbers");
    v(i) = j[i].get<double>();
  }
  if (!v.allFinite()) throw JsonFormatError("'" + key + "' entries must be finite");
  return v;
}

}  // namespace

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw JsonFormatError("algebra JSON requires an integer 'dim'");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1 || dim > 8) throw JsonFormatError("'dim' must be between 1 and 8");
  LieAlgebra algebra(dim);
  if (!j.contains("brackets")) return algebra;
  if (!j["brackets"].is_array()) throw JsonFormatError("'brackets' must be an array");

  std::set<std::pair<int, int>> seen;
  for (const Json& entry : j["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs")) {
      throw JsonFormatError("each bracket needs 'i', 'j' and 'coeffs'");
    }
    const int i = entry["i"].get<int>();
    const int jj = entry["j"].get<int>();
    if (i < 1 || i > dim || jj < 1 || jj > dim || i == jj) {
      throw JsonFormatError("bracket indices must be distinct and in [1, dim]");
    }
    auto canonical = std::minmax(i, jj);
    if (!seen.insert(canonical).second) {
      throw JsonFormatError("duplicate bracket pair (" + std::to_string(canonical.first) + "," +
                            std::to_string(canonical.second) + ")");
    }
    Vector coeffs = Vector::Zero(dim);
    for (const auto& [key, value] : entry["coeffs"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw JsonFormatError("coefficient keys must be basis indices");
      }
      if (k < 1 || k > dim) throw JsonFormatError("coefficient index out of range");
      if (!value.is_number()) throw JsonFormatError("coefficients must be numbers");
      coeffs(k - 1) = value.get<double>();
    }
    algebra.set_bracket(i - 1, jj - 1, coeffs);
  }
  return algebra;
}

Json algebra_to_json(const LieAlgebra& algebra) {
  Json j;
  j["dim"] = algebra.dim();
  Json brackets = Json::array();
  for (int i = 0; i < algebra.dim(); ++i) {
    for (int jj = i + 1; jj < algebra.dim(); ++jj) {
      Vector c = algebra.bracket_basis(i, jj);
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      Json entry;
      entry["i"] = i + 1;
      entry["j"] = jj + 1;
      Json coeffs = Json::object();
      for (int k = 0; k < algebra.dim(); ++k) {
        if (c(k) != 0.0) coeffs[std::to_string(k + 1)] = c(k);
      }
      entry["coeffs"] = std::move(coeffs);
      brackets.push_back(std::move(entry));
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

ParsedStructure structure_from_json(const Json& j, const Tolerance& tol) {
  LieAlgebra algebra = algebra_from_json(j);
  const int n = algebra.dim();
  const bool has_contact =
      j.contains("phi") || j.contains("xi") || j.contains("eta") || j.contains("gram");
  if (!has_contact) {
    return ParsedStructure{std::move(algebra), std::nullopt};
  }
  for (const char* key : {"phi", "xi", "eta", "gram"}) {
    if (!j.contains(key)) {
      throw JsonFormatError("contact structure requires 'phi', 'xi', 'eta' and 'gram'");
    }
  }
  Matrix phi = matrix_from_json(j["phi"], n, n, "phi");
  Matrix gram = matrix_from_json(j["gram"], n, n, "gram");
  Vector xi = vector_from_json(j["xi"], n, "xi");
  Vector eta = vector_from_json(j["eta"], n, "eta");
  MetricLieAlgebra metric(algebra, std::move(gram), tol);
  return ParsedStructure{
      std::move(algebra),
      ContactMetricStructure{std::move(metric), std::move(phi), std::move(xi), std::move(eta)}};
}

ParsedStructure structure_from_file(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(std::string("JSON parse error: ") + e.what());
  }
  return structure_from_json(j, tol);
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["subject"] = report.subject;
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["residual"] = c.residual;
    entry["tol"] = c.tol;
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["elapsed_ms"] = 0.0;
  return j;
}

Json sweep_to_json(const SweepResult& sweep) {
  Json rows = Json::array();
  for (const SweepRow& row : sweep.rows) {
    Json r;
    r["a"] = row.a;
    if (row.error.empty()) {
      r["k"] = row.k;
      if (row.mu) r["mu"] = *row.mu;
      if (row.boeckx) r["I"] = *row.boeckx;
      r["kmu_residual"] = row.kmu_residual;
      r["contact_residual"] = row.contact_residual;
    } else {
      r["error"] = row.error;
    }
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string sweep_to_text(const SweepResult& sweep) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%8s %12s %12s %12s %10s %10s  %s\n", "a", "k", "mu", "I",
                "kmu_res", "axiom_res", "status");
  out << line;
  for (const SweepRow& row : sweep.rows) {
    if (!row.error.empty()) {
      std::snprintf(line, sizeof(line), "%8.4g %62s  %s\n", row.a, row.error.c_str(), "ERROR");
      out << line;
      continue;
    }
    char mu_buf[16] = "-";
    char i_buf[16] = "-";
    if (row.mu) std::snprintf(mu_buf, sizeof(mu_buf), "%.6f", *row.mu);
    if (row.boeckx) std::snprintf(i_buf, sizeof(i_buf), "%.6f", *row.boeckx);
    std::snprintf(line, sizeof(line), "%8.4g %12.8f %12s %12s %10.2e %10.2e  %s\n", row.a, row.k,
                  mu_buf, i_buf, row.kmu_residual, row.contact_residual,
                  row.pass ? "ok" : "FAIL");
    out << line;
  }
  out << "invariant monotone toward -1: " << (sweep.invariant_monotone ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace sasaki

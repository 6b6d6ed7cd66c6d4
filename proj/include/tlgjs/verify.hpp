#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlgjs/rational.hpp"

namespace tlgjs {

struct SuiteConfig {
  Rational delta = Rational(5, 2);
  int max_level = 5;
  int max_bottom = 24;
  std::uint64_t seed = 42;
  double float_tol = 1e-9;
  int moment_p_max = 64;
  std::vector<std::string> suites;  // empty selects every suite
};

// One verified identity. `mode` is "exact" or "float"; `policy` is "gate"
// (failures fail the run) or "report" (informational). The metric is a
// residual (passes when <= tol) or a margin (passes when >= tol).
struct CheckRecord {
  std::string name;
  std::string anchor;  // stable tag of the identity being checked
  std::string mode;
  std::string policy;
  std::string metric_kind;  // "residual" | "margin"
  double metric = 0.0;
  double tol = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string note;
};

struct Report {
  SuiteConfig config;  // echoed into the output so runs are reproducible from the report alone
  std::vector<CheckRecord> records;

  bool all_gates_pass() const;
  // A config line followed by one JSON object per check; timing can be
  // omitted for byte-stable output.
  std::string to_json_lines(bool include_timing = true) const;
};

const std::vector<std::string>& all_suite_names();

// Runs the selected suites with fixed seeds; deterministic given the config
// and free of global state. Throws std::invalid_argument on an unknown suite
// name or invalid config. A check that exceeds the bottom-string budget is
// recorded as failed, not fatal.
Report run_suites(const SuiteConfig& cfg);

struct DimensionEntry {
  int b = 0, l = 0, r = 0;
  std::uint64_t dim = 0;
};

// dim of the (b, l, r) component for every triple with b+l+r <= 2*max_n:
// the Catalan number of half the boundary size on even totals, 0 on odd.
std::vector<DimensionEntry> dimension_table(int max_n);

}  // namespace tlgjs

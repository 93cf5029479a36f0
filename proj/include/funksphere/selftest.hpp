#pragma once

// Invariant suite run by `funksphere selftest`.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace funksphere {

struct CheckResult {
  std::string name;
  bool passed = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SelftestOptions {
  int n_max = 12;
  std::uint64_t seed = 1;
  /// Test hook: name of a deliberate defect to inject (see selftest_faults()).
  std::string fault;
};

struct SelftestReport {
  int n_max = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
};

/// Accepted values of SelftestOptions::fault.
const std::vector<std::string>& selftest_faults();

/// Throws std::invalid_argument for a negative n_max or an unknown fault.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace funksphere

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace higauge {

struct SuiteConfig {
  std::vector<std::string> suites;  // empty selects every registered suite
  std::uint64_t seed = 42;
  int trials = 100;
  double fd_step = 1e-5;
  std::map<std::string, double> tol_overrides;  // suite name -> tolerance
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteResult> suites;
  bool pass = false;
};

/// Registered suite names in execution order.
std::vector<std::string> suite_names();

double suite_default_tolerance(const std::string& name);

/// Runs the selected suites. Each trial's randomness is derived from
/// (seed, suite index, trial index), so results are reproducible and
/// independent of execution order. Throws std::invalid_argument for an
/// unknown suite name or a non-positive tolerance override.
SuiteReport run_suites(const SuiteConfig& config);

}  // namespace higauge

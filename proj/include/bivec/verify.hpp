#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bivec {

/// Outcome of one named certificate. `residual` and `threshold` are the
/// headline numbers of the machine-readable summary; whether passing means
/// staying below a tolerance or above a floor depends on the check.
struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double threshold = 0.0;
  std::string detail;  // extra key=value pairs

  std::string summary_line(std::uint64_t seed) const;
};

std::vector<std::string> check_names();

/// Runs one certificate. samples <= 0 selects the per-check default
/// (random draws, Monte Carlo samples, or minimizer restarts).
CheckResult run_check(const std::string& name, std::uint64_t seed, int samples = 0);

std::vector<CheckResult> run_all_checks(std::uint64_t seed, int samples = 0);

}  // namespace bivec

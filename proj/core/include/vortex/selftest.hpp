#pragma once

#include <string>
#include <vector>

namespace vortex {

struct SelftestResult {
  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;
};

// Suite names in run order: scalars, cones, cohomring, fourier_mukai,
// geometry, moduli, metrics, maps.
const std::vector<std::string>& selftest_suites();

// Runs the suites whose name equals `filter` (all when empty). Throws
// PreconditionError for an unknown suite name. An exception thrown inside a
// check counts as a failure of that check.
std::vector<SelftestResult> run_selftest(const std::string& filter = "");

}  // namespace vortex

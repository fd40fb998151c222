#pragma once

// Numeric verification suites behind `hyptet verify` and the C API.

#include <cstdint>
#include <string>
#include <vector>

namespace hyptet {

struct Check {
  std::string name;
  double residual;  // what was measured
  double tol;       // threshold it must stay under
  bool pass;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool pass;
};

std::vector<std::string> suite_names();  // group, identities, coords, quadratic,
                                         // zlist, volumes, oracle, all

// trials <= 0 picks each suite's default; tol_override > 0 replaces every
// check's threshold.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int trials,
                      double tol_override = 0.0);

}  // namespace hyptet

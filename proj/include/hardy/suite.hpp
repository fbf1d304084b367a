#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hardy {

struct SuiteConfig {
  int cases = 500;
  std::uint64_t seed = 0;
  double quad_tol = 1e-10;
};

struct SuiteCheck {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

/// Randomised property suite over mixed laws: the four probabilistic
/// inequalities, alpha residuals and the p = 2 closed form, the quantile-scale
/// identity, and the stretch invariants.
std::vector<SuiteCheck> run_property_suite(const SuiteConfig& config);

void print_suite(std::ostream& out, const std::vector<SuiteCheck>& checks);
bool suite_passed(const std::vector<SuiteCheck>& checks);

}  // namespace hardy

#ifndef AREALM_TOOLS_VERIFY_SUITES_HPP
#define AREALM_TOOLS_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace arealm::cli {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct SuiteOptions {
  int grid = 50;
  std::vector<double> ks = {0.5, 1.0, 2.0, 3.0};
  long long samples = 1'000'000;
  std::uint64_t seed = 42;
};

std::vector<std::string> suite_names();

// Runs one named invariant suite; throws DomainError on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opt);

}  // namespace arealm::cli

#endif

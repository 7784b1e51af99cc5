#pragma once

// Invariant suites per module, run by `verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace springer {

struct SuiteResult {
  std::string name;
  bool ok = true;
  long long checks = 0;
  std::string first_failure;
  double seconds = 0;
};

std::vector<std::string> suite_names();
// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, int n_max, std::uint64_t seed);
std::vector<SuiteResult> verify_all(int n_max, std::uint64_t seed);

}  // namespace springer

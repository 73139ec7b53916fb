#pragma once

// Seeded randomized property suites over every module.

#include <cstdint>
#include <string>
#include <vector>

namespace milnor {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && cases > 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  double elapsed_ms = 0;
  bool pass() const;
};

/// ring, bundle, classes, lecycles, intersect, projbundle.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& suite, std::uint64_t seed);

/// Per-property lines with counts, then a per-suite and total summary.
std::string render_suites(const std::vector<SuiteResult>& results, bool with_timing = true);

}  // namespace milnor

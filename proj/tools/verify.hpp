#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coinrm::tools {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, empty when passed
};

// Cross-validates every closed-form result against the exhaustive search at
// the given scale (sequence lengths up to max_len; some suites cap lower).
// Prints one line per suite to `progress` when non-null.
std::vector<SuiteResult> run_verification(int max_len, std::uint64_t seed,
                                          std::ostream* progress);

}  // namespace coinrm::tools

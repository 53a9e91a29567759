#pragma once

// Randomized property suite behind `vk selftest`.
//
// Every property the invariants are supposed to satisfy is checked on a
// seeded random corpus; a failure report names the violated property and the
// offending code.  The --inject-fault flag deliberately corrupts one input of
// the oracle-bridge check so the plumbing that reports failures is itself
// exercised.

#include <cstdint>
#include <string>
#include <vector>

namespace vk {

struct SelfTestOptions {
  std::size_t max_n = 10;   // largest crossing count in the corpus
  std::size_t count = 300;  // corpus size
  std::uint64_t seed = 1729;
  bool inject_fault = false;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string detail;  // first failure, empty when passed
};

struct SelfTestReport {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

SelfTestReport run_selftest(const SelfTestOptions& options);

// One line per property ("PASS <name> (<cases> cases)" or
// "FAIL <name>: <detail>") plus a summary line; byte-identical for a fixed
// seed.
std::string render_selftest_text(const SelfTestReport& report);

}  // namespace vk

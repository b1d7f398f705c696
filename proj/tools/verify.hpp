#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ured/config.hpp"

namespace ured::cli {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

struct VerifyOptions {
  std::uint64_t max_n = 60;
  // Test hook: perturbs S*_2 on the formula side of the charpoly suite.
  bool tamper_s2 = false;
};

// Runs every cross-check suite up to max_n. Throws ResourceError when max_n
// exceeds the oracle guard.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts, const RunConfig& cfg);

// "suite,cases,failures" then one line per suite.
void write_summary(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace ured::cli

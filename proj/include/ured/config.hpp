#pragma once

#include <cstdint>
#include <string>

namespace ured {

// Size guards and numeric tolerances shared by the library and the CLI.
struct Limits {
  // Largest table the sieve will allocate.
  static constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 31;
  // Dense exact matrices (products, Bareiss) are refused above this dimension.
  std::uint64_t dense_max = 512;
  // The evaluate-and-interpolate characteristic polynomial oracle is O(n^4).
  std::uint64_t oracle_max = 64;
};

struct Tolerances {
  double root_tol = 1e-12;
  double power_tol = 1e-10;
  int power_max_iter = 10000;
  int root_max_iter = 500;
};

struct RunConfig {
  int threads = 1;
  std::uint64_t segment_size = std::uint64_t{1} << 16;
  Tolerances tolerances;
  Limits guards;
  std::string output;  // empty means stdout

  // Throws ContractViolation when a field is out of range.
  void validate() const;
};

// Loads RunConfig keys from a JSON object file; missing keys keep defaults.
RunConfig load_run_config(const std::string& path, RunConfig base = {});

// Applies URED_THREADS from the environment when set.
void apply_environment(RunConfig& cfg);

}  // namespace ured

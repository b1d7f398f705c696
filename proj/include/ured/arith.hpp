#pragma once

// Sieve-based arithmetic over unitary divisors: omega, the unitary Moebius
// function, unitary convolution, unitary Mertens sums, Stirling numbers of the
// second kind, primorials and the k_n step sequence.
//
// Integers m are 1-indexed throughout. Value arrays over 1..n are stored in a
// std::vector of length n with the value at m in slot m - 1.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace ured {

// omega(m) and smallest prime factor for every 1 <= m <= limit.
class OmegaTable {
 public:
  // Linear sieve. Throws ResourceError for n > Limits::kMaxSieveLimit and
  // ContractViolation for n == 0.
  static OmegaTable build(std::uint64_t n);

  std::uint64_t limit() const noexcept { return limit_; }

  // Number of distinct primes dividing m. Throws ContractViolation if m is
  // outside 1..limit.
  int omega(std::uint64_t m) const;
  // Smallest prime factor of m >= 2.
  std::uint32_t spf(std::uint64_t m) const;

  // Raw omega values; slot m - 1 holds omega(m).
  std::span<const std::uint8_t> omegas() const noexcept { return omega_; }

 private:
  OmegaTable() = default;

  std::uint64_t limit_ = 0;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint32_t> spf_;  // slot m - 1; spf_[0] is 1
};

// counts[j] = #{m <= limit : omega(m) = j}.
struct OmegaHistogram {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> counts;

  // Largest j with counts[j] > 0, i.e. max omega(m) over m <= limit.
  int max_omega() const noexcept { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const OmegaHistogram&) const = default;
};

// Triangular table of exact Stirling numbers of the second kind {n brace k}.
class StirlingTable {
 public:
  StirlingTable(int max_n, int max_k);

  int max_n() const noexcept { return max_n_; }
  int max_k() const noexcept { return max_k_; }

  // {n brace k}; zero for k > n. Throws ContractViolation beyond the table.
  const mpz_class& at(int n, int k) const;

 private:
  int max_n_;
  int max_k_;
  std::vector<mpz_class> values_;  // row-major (max_n + 1) x (max_k + 1)
};

// (-1)^omega(m).
int mu_star(const OmegaTable& t, std::uint64_t m);

// i | j and gcd(i, j / i) == 1.
bool is_unitary_divisor(std::uint64_t i, std::uint64_t j);

// Ascending list of the 2^omega(m) unitary divisors of m (trial division).
std::vector<std::uint64_t> unitary_divisors(std::uint64_t m);

// result[m] = sum over d || m of f[d] g[m / d]. Throws ContractViolation on
// length mismatch.
std::vector<std::int64_t> unitary_convolve(std::span<const std::int64_t> f,
                                           std::span<const std::int64_t> g);

// M*(x) = sum_{k <= x} mu*(k).
std::int64_t mertens_star(const OmegaTable& t, std::uint64_t x);

// M*(x, n) = sum_{k <= x, gcd(k, n) = 1} mu*(k). x = 0 gives 0, which is the
// value of the sum for any real 0 < x < 1.
std::int64_t mertens_star_coprime(const OmegaTable& t, std::uint64_t x,
                                  std::uint64_t n);

// Histogram straight from a full table.
OmegaHistogram omega_histogram(const OmegaTable& t, std::uint64_t x);

// Segmented prime-marking histogram, O(segment_size + pi(sqrt x)) memory per
// worker. Segments run on OpenMP threads; the result does not depend on the
// thread count.
OmegaHistogram omega_histogram(std::uint64_t x, std::uint64_t segment_size);

// Single-threaded reference for the segmented kernel.
OmegaHistogram omega_histogram_serial(std::uint64_t x, std::uint64_t segment_size);

StirlingTable stirling2_table(int max_n, int max_k);

// Product of the first k primes.
mpz_class primorial(unsigned k);

// k_1 = 0, k_n = max(k_{n-1}, omega(n) + 1).
int k_sequence(const OmegaTable& t, std::uint64_t n);

// k_n for every 1 <= n <= t.limit() in one pass; slot n - 1 holds k_n.
std::vector<std::uint8_t> k_sequence_all(const OmegaTable& t);

// The unique k with N_{k-1} <= n < N_k, for n >= 2 (N_k the k-th primorial);
// 0 for n = 1.
int k_from_primorial(std::uint64_t n);

}  // namespace ured

// Segmented omega histogram. Each segment [lo, hi) is factored by marking the
// multiples of every prime p <= sqrt(x); a cofactor left over above 1 is one
// further prime. Segments are independent, so the OpenMP kernel hands them to
// threads and merges per-thread histograms with integer sums.

#include <algorithm>
#include <cmath>
#include <vector>

#include <omp.h>

#include "ured/arith.hpp"
#include "ured/errors.hpp"

namespace ured {

namespace {

constexpr std::size_t kMaxOmega = 16;  // omega(m) <= 15 for m < 2^64

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct SegmentScratch {
  std::vector<std::uint64_t> rest;
  std::vector<std::uint8_t> count;
};

// Adds omega counts of lo..hi-1 into hist.
void histogram_segment(std::uint64_t lo, std::uint64_t hi,
                       const std::vector<std::uint64_t>& primes,
                       SegmentScratch& scratch, std::uint64_t* hist) {
  const std::size_t len = hi - lo;
  scratch.rest.resize(len);
  scratch.count.assign(len, 0);
  for (std::size_t i = 0; i < len; ++i) scratch.rest[i] = lo + i;
  for (std::uint64_t p : primes) {
    if (p * p >= hi) {
      // Larger primes divide a member at most once and never two at a time;
      // the leftover cofactor counts them.
      break;
    }
    for (std::uint64_t m = (lo + p - 1) / p * p; m < hi; m += p) {
      const std::size_t i = m - lo;
      ++scratch.count[i];
      std::uint64_t r = scratch.rest[i];
      do r /= p; while (r % p == 0);
      scratch.rest[i] = r;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t w = scratch.count[i] + (scratch.rest[i] > 1 ? 1 : 0);
    ++hist[w];
  }
}

OmegaHistogram finish(std::uint64_t x, const std::uint64_t* hist) {
  OmegaHistogram h;
  h.limit = x;
  std::size_t top = kMaxOmega;
  while (top > 1 && hist[top - 1] == 0) --top;
  h.counts.assign(hist, hist + top);
  return h;
}

void check_args(std::uint64_t x, std::uint64_t segment_size) {
  if (x == 0) throw ContractViolation("omega_histogram: x must be >= 1");
  if (segment_size < 2) throw ContractViolation("omega_histogram: segment_size must be >= 2");
}

}  // namespace

OmegaHistogram omega_histogram_serial(std::uint64_t x, std::uint64_t segment_size) {
  check_args(x, segment_size);
  const auto primes = primes_up_to(isqrt(x));
  std::uint64_t hist[kMaxOmega] = {};
  SegmentScratch scratch;
  for (std::uint64_t lo = 1; lo <= x; lo += segment_size) {
    histogram_segment(lo, std::min(lo + segment_size, x + 1), primes, scratch, hist);
  }
  return finish(x, hist);
}

OmegaHistogram omega_histogram(std::uint64_t x, std::uint64_t segment_size) {
  check_args(x, segment_size);
  const auto primes = primes_up_to(isqrt(x));
  const std::int64_t segments =
      static_cast<std::int64_t>((x + segment_size - 1) / segment_size);
  std::uint64_t hist[kMaxOmega] = {};
#pragma omp parallel
  {
    std::uint64_t local[kMaxOmega] = {};
    SegmentScratch scratch;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t s = 0; s < segments; ++s) {
      const std::uint64_t lo = 1 + static_cast<std::uint64_t>(s) * segment_size;
      histogram_segment(lo, std::min(lo + segment_size, x + 1), primes, scratch, local);
    }
#pragma omp critical(ured_omega_histogram)
    for (std::size_t j = 0; j < kMaxOmega; ++j) hist[j] += local[j];
  }
  return finish(x, hist);
}

}  // namespace ured

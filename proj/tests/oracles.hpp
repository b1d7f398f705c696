#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's own kernels.

#include <cstdint>
#include <numeric>
#include <vector>

namespace ured::oracle {

inline int omega_trial(std::uint64_t m) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    ++count;
    while (m % p == 0) m /= p;
  }
  return count + (m > 1 ? 1 : 0);
}

inline std::vector<std::uint64_t> unitary_divisors_filter(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0 && std::gcd(d, m / d) == 1) out.push_back(d);
  }
  return out;
}

inline bool unitary(std::uint64_t i, std::uint64_t j) {
  return j % i == 0 && std::gcd(i, j / i) == 1;
}

inline int mu_star_trial(std::uint64_t m) { return omega_trial(m) % 2 ? -1 : 1; }

// Set partitions of {1..n} into exactly k blocks, by walking restricted
// growth strings.
inline std::uint64_t stirling2_enumerate(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> a(n, 0);
  std::vector<int> maxima(n, 0);  // max of a[0..i]
  std::uint64_t count = 0;
  while (true) {
    if (maxima[n - 1] + 1 == k) ++count;
    int i = n - 1;
    while (i > 0 && a[i] > maxima[i - 1]) --i;
    if (i == 0) break;
    ++a[i];
    maxima[i] = std::max(maxima[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  return count;
}

// Ordered k-tuples (d_1..d_k), each >= 2, pairwise coprime, with product m.
inline std::uint64_t dstar_count(std::uint64_t m, int k, std::uint64_t used = 1) {
  if (k == 0) return m == 1 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t d = 2; d <= m; ++d) {
    if (m % d == 0 && std::gcd(d, used) == 1 && std::gcd(d, m / d) == 1) {
      count += dstar_count(m / d, k - 1, used * d);
    }
  }
  return count;
}

// M*(x, n) by trial division.
inline std::int64_t mertens_coprime_trial(std::uint64_t x, std::uint64_t n) {
  std::int64_t s = 0;
  for (std::uint64_t k = 1; k <= x; ++k) {
    if (std::gcd(k, n) == 1) s += mu_star_trial(k);
  }
  return s;
}

}  // namespace ured::oracle

#include "ured/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ured/config.hpp"
#include "ured/errors.hpp"

namespace ured {

namespace {

void check_index(const OmegaTable& t, std::uint64_t m, const char* what) {
  if (m < 1 || m > t.limit()) {
    throw ContractViolation(std::string(what) + ": argument " + std::to_string(m) +
                            " outside 1.." + std::to_string(t.limit()));
  }
}

}  // namespace

OmegaTable OmegaTable::build(std::uint64_t n) {
  if (n == 0) throw ContractViolation("build_omega_table: n must be >= 1");
  if (n > Limits::kMaxSieveLimit) {
    throw ResourceError("build_omega_table: n = " + std::to_string(n) +
                        " exceeds the sieve cap 2^31");
  }
  OmegaTable t;
  t.limit_ = n;
  t.omega_.assign(n, 0);
  t.spf_.assign(n, 0);
  t.spf_[0] = 1;
  std::vector<std::uint32_t> primes;
  for (std::uint64_t m = 2; m <= n; ++m) {
    if (t.spf_[m - 1] == 0) {
      t.spf_[m - 1] = static_cast<std::uint32_t>(m);
      primes.push_back(static_cast<std::uint32_t>(m));
    }
    const std::uint32_t p_m = t.spf_[m - 1];
    for (std::uint32_t p : primes) {
      if (p > p_m || std::uint64_t{p} * m > n) break;
      t.spf_[p * m - 1] = p;
    }
    // omega(m) = omega(m / p) + [p does not divide m / p]
    const std::uint64_t rest = m / p_m;
    t.omega_[m - 1] = static_cast<std::uint8_t>(
        t.omega_[rest - 1] + (rest == 1 || t.spf_[rest - 1] != p_m ? 1 : 0));
  }
  return t;
}

int OmegaTable::omega(std::uint64_t m) const {
  check_index(*this, m, "omega");
  return omega_[m - 1];
}

std::uint32_t OmegaTable::spf(std::uint64_t m) const {
  check_index(*this, m, "spf");
  if (m < 2) throw ContractViolation("spf: m must be >= 2");
  return spf_[m - 1];
}

StirlingTable::StirlingTable(int max_n, int max_k) : max_n_(max_n), max_k_(max_k) {
  if (max_n < 0 || max_k < 0) throw ContractViolation("stirling2_table: negative size");
  const auto width = static_cast<std::size_t>(max_k) + 1;
  values_.assign((static_cast<std::size_t>(max_n) + 1) * width, mpz_class(0));
  values_[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= std::min(n, max_k); ++k) {
      const auto up = static_cast<std::size_t>(n - 1) * width;
      values_[n * width + k] = k * values_[up + k] + values_[up + k - 1];
    }
  }
}

const mpz_class& StirlingTable::at(int n, int k) const {
  if (n < 0 || k < 0 || n > max_n_ || k > max_k_) {
    throw ContractViolation("stirling: {" + std::to_string(n) + " brace " +
                            std::to_string(k) + "} outside table");
  }
  return values_[static_cast<std::size_t>(n) * (max_k_ + 1) + k];
}

int mu_star(const OmegaTable& t, std::uint64_t m) {
  return (t.omega(m) & 1) ? -1 : 1;
}

bool is_unitary_divisor(std::uint64_t i, std::uint64_t j) {
  if (i == 0 || j == 0) throw ContractViolation("is_unitary_divisor: arguments must be positive");
  return j % i == 0 && std::gcd(i, j / i) == 1;
}

std::vector<std::uint64_t> unitary_divisors(std::uint64_t m) {
  if (m == 0) throw ContractViolation("unitary_divisors: m must be positive");
  // Each maximal prime power p^a || m either goes wholly into d or not at all.
  std::vector<std::uint64_t> divisors{1};
  auto add_block = [&divisors](std::uint64_t block) {
    const std::size_t half = divisors.size();
    for (std::size_t i = 0; i < half; ++i) divisors.push_back(divisors[i] * block);
  };
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t block = 1;
    while (rest % p == 0) {
      rest /= p;
      block *= p;
    }
    add_block(block);
  }
  if (rest > 1) add_block(rest);
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<std::int64_t> unitary_convolve(std::span<const std::int64_t> f,
                                           std::span<const std::int64_t> g) {
  if (f.size() != g.size()) {
    throw ContractViolation("unitary_convolve: arrays differ in length");
  }
  const std::uint64_t n = f.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::uint64_t d = 1; d <= n; ++d) {
    for (std::uint64_t k = 1; d * k <= n; ++k) {
      if (std::gcd(d, k) == 1) out[d * k - 1] += f[d - 1] * g[k - 1];
    }
  }
  return out;
}

std::int64_t mertens_star(const OmegaTable& t, std::uint64_t x) {
  check_index(t, x, "mertens_star");
  std::int64_t sum = 0;
  for (std::uint8_t w : t.omegas().first(x)) sum += (w & 1) ? -1 : 1;
  return sum;
}

std::int64_t mertens_star_coprime(const OmegaTable& t, std::uint64_t x, std::uint64_t n) {
  if (x == 0) return 0;
  check_index(t, x, "mertens_star_coprime");
  if (n == 0) throw ContractViolation("mertens_star_coprime: n must be positive");
  std::int64_t sum = 0;
  for (std::uint64_t k = 1; k <= x; ++k) {
    if (std::gcd(k, n) == 1) sum += mu_star(t, k);
  }
  return sum;
}

OmegaHistogram omega_histogram(const OmegaTable& t, std::uint64_t x) {
  check_index(t, x, "omega_histogram");
  OmegaHistogram h;
  h.limit = x;
  for (std::uint8_t w : t.omegas().first(x)) {
    if (w >= h.counts.size()) h.counts.resize(w + 1, 0);
    ++h.counts[w];
  }
  return h;
}

StirlingTable stirling2_table(int max_n, int max_k) { return StirlingTable(max_n, max_k); }

mpz_class primorial(unsigned k) {
  mpz_class product = 1;
  mpz_class p = 1;
  for (unsigned i = 0; i < k; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    product *= p;
  }
  return product;
}

int k_sequence(const OmegaTable& t, std::uint64_t n) {
  check_index(t, n, "k_sequence");
  int k = 0;
  for (std::uint64_t m = 2; m <= n; ++m) k = std::max(k, t.omega(m) + 1);
  return k;
}

std::vector<std::uint8_t> k_sequence_all(const OmegaTable& t) {
  std::vector<std::uint8_t> ks(t.limit(), 0);
  std::uint8_t k = 0;
  const auto omegas = t.omegas();
  for (std::uint64_t m = 2; m <= t.limit(); ++m) {
    k = std::max<std::uint8_t>(k, omegas[m - 1] + 1);
    ks[m - 1] = k;
  }
  return ks;
}

int k_from_primorial(std::uint64_t n) {
  if (n == 0) throw ContractViolation("k_from_primorial: n must be positive");
  if (n == 1) return 0;
  // N_0..N_15 fit in 64 bits; N_16 exceeds every uint64 value.
  static const std::vector<std::uint64_t> small = [] {
    std::vector<std::uint64_t> v;
    for (unsigned k = 0; k <= 15; ++k) v.push_back(primorial(k).get_ui());
    return v;
  }();
  // N_{k-1} <= n < N_k
  int k = 1;
  while (k < static_cast<int>(small.size()) && small[k] <= n) ++k;
  return k;
}

}  // namespace ured

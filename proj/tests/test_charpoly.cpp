#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ured/charpoly.hpp"
#include "ured/errors.hpp"
#include "ured/matrixlab.hpp"

using namespace ured;

namespace {

std::vector<std::string> strings(const std::vector<mpz_class>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

// S*_k(n) by summing brute-force factorization counts over m <= n.
mpz_class sstar_brute(std::uint64_t n, int k) {
  mpz_class s = 0;
  for (std::uint64_t m = 1; m <= n; ++m) s += static_cast<unsigned long>(oracle::dstar_count(m, k));
  return s;
}

}  // namespace

TEST_CASE("ShiftedPoly normalizes and renders") {
  const ShiftedPoly p({{5, -2}, {8, 1}, {6, -7}, {3, 0}});
  CHECK(p.terms().size() == 3);
  CHECK(p.degree() == 8);
  CHECK(p.valuation() == 5);
  CHECK(p.coeff(6) == -7);
  CHECK(p.coeff(7) == 0);
  CHECK(p.to_string() == "\xCE\xBC^8 - 7\xCE\xBC^6 - 2\xCE\xBC^5");
  CHECK(p.to_string(true) == "u^8 - 7u^6 - 2u^5");
  CHECK(ShiftedPoly({{0, -1}, {1, 1}, {1, 1}}).to_string(true) == "2u - 1");
  CHECK(ShiftedPoly({{2, 1}, {2, -1}}).is_zero());
  CHECK(p.divide_by_u_power(5).to_string(true) == "u^3 - 7u - 2");
  CHECK_THROWS_AS(p.divide_by_u_power(6), ContractViolation);
}

TEST_CASE("D*_k through Stirling numbers") {
  const auto st = stirling2_table(8, 8);
  CHECK(dstar(st, 2, 2) == 2);
  CHECK(dstar(st, 2, 1) == 0);
  CHECK(dstar(st, 3, 3) == 6);
  CHECK(dstar(st, 1, 0) == 0);
  CHECK_THROWS_AS(dstar(st, 0, 3), ContractViolation);
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    const int w = oracle::omega_trial(m);
    for (int k = 1; k <= 5; ++k) REQUIRE(dstar(st, k, w) == oracle::dstar_count(m, k));
  }
  // binomial form with 0^0 = 1: sum_j (-1)^(k-j) C(k,j) j^w
  for (int k = 1; k <= 6; ++k) {
    for (int w = 0; w <= 7; ++w) {
      mpz_class sum = 0, binom, power;
      for (int j = 0; j <= k; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), k, j);
        mpz_ui_pow_ui(power.get_mpz_t(), j, w);  // GMP gives 0^0 = 1
        sum += ((k - j) % 2 ? -1 : 1) * binom * power;
      }
      REQUIRE(dstar(st, k, w) == sum);
    }
  }
}

TEST_CASE("S*_k sums") {
  CHECK(strings(sstar_all(omega_histogram(8, 16), 8)) == std::vector<std::string>{"2"});
  CHECK(strings(sstar_all(omega_histogram(6, 16), 6)) == std::vector<std::string>{"2"});
  CHECK(strings(sstar_all(omega_histogram(30, 16), 30)) == std::vector<std::string>{"30", "6"});
  CHECK(sstar_all(omega_histogram(5, 16), 5).empty());
  CHECK_THROWS_AS(sstar_all(omega_histogram(8, 16), 9), ContractViolation);
  for (std::uint64_t n : {2ULL, 17ULL, 210ULL, 211ULL, 777ULL, 2310ULL}) {
    const auto s = sstar_all(omega_histogram(n, 64), n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      REQUIRE(s[i] == sstar_brute(n, static_cast<int>(i) + 2));
    }
    // nothing emitted for k >= k_n
    CHECK(sstar_brute(n, static_cast<int>(s.size()) + 2) == 0);
  }
}

TEST_CASE("S*_k from the segmented histogram equals direct D* summation") {
  const std::uint64_t n = 100000;
  const auto t = OmegaTable::build(n);
  const auto st = stirling2_table(8, 8);
  std::vector<mpz_class> direct(6, mpz_class(0));
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (int k = 2; k < 8; ++k) direct[k - 2] += dstar(st, k, t.omega(m));
  }
  const auto s = sstar_all(omega_histogram(n, 4096), n);
  REQUIRE(s.size() == 5);  // k_n = 7 for 30030 <= n < 510510
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == direct[i]);
  CHECK(direct[5] == 0);
}

TEST_CASE("shifted characteristic polynomial") {
  auto shifted = [](std::uint64_t n) { return charpoly_shifted(omega_histogram(n, 16), n); };
  CHECK(shifted(1).to_string(true) == "u");
  CHECK(shifted(2).to_string(true) == "u^2 - 1");
  CHECK(shifted(3).to_string(true) == "u^3 - 2u");
  CHECK(shifted(8).to_string(true) == "u^8 - 7u^6 - 2u^5");
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(8) == 3);
  CHECK(floor_log2(1023) == 9);
  CHECK(floor_log2(1024) == 10);
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const auto p = shifted(n);
    REQUIRE(p.coeff(n) == 1);
    REQUIRE(p.coeff(n - 1) == 0);
    REQUIRE(p.coeff(n - 2) == -static_cast<long>(n - 1));
    REQUIRE(p.terms().size() <= static_cast<std::size_t>(floor_log2(n)) + 1);
  }
}

TEST_CASE("reduced polynomial and multiplicity") {
  auto reduced = [](std::uint64_t n) { return reduced_poly(omega_histogram(n, 16), n); };
  CHECK(reduced(8).to_string(true) == "u^3 - 7u - 2");
  CHECK(reduced(2).to_string(true) == "u^2 - 1");
  CHECK(reduced(6).to_string(true) == "u^3 - 5u - 2");
  CHECK(reduced(1).to_string(true) == "1");

  const auto t = OmegaTable::build(100000);
  CHECK(multiplicity(t, 8).m_n == 5);
  CHECK(multiplicity(t, 2).m_n == 0);
  CHECK(multiplicity(t, 1).m_n == 1);
  CHECK(multiplicity(t, 1).k_n == 0);
  CHECK(multiplicity(t, 2310).k_n == 6);

  const auto ks = k_sequence_all(t);
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    const auto q = reduced(n);
    const int k = ks[n - 1];
    REQUIRE(q.degree() == static_cast<std::uint64_t>(k));
    REQUIRE(q.coeff(0) != 0);
    REQUIRE(q.coeff(k - 1) == 0);
  }
}

TEST_CASE("monomial expansion matches the interpolation oracle") {
  CHECK(strings(expand_to_monomial(ShiftedPoly({{2, 1}, {0, -1}}))) ==
        std::vector<std::string>{"0", "-2", "1"});
  CHECK(strings(expand_to_monomial(ShiftedPoly({{1, 1}}))) == std::vector<std::string>{"-1", "1"});
  CHECK_THROWS_AS(expand_to_monomial(ShiftedPoly({{65, 1}})), ResourceError);

  const auto t = OmegaTable::build(40);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const auto oracle = charpoly_oracle(n);
    REQUIRE(expand_to_monomial(charpoly_shifted(omega_histogram(n, 16), n)) == oracle);
    REQUIRE(multiplicity_of_one(oracle) == multiplicity(t, n).m_n);
  }
}

TEST_CASE("power sums give the trace identities") {
  const auto r = build_rstar(150);
  CHECK(trace(r) == 150);
  for (std::uint64_t n = 2; n <= 10000; n += (n < 300 ? 1 : 37)) {
    const auto q = reduced_poly(omega_histogram(n, 256), n);
    const auto [p1, p2] = power_sums_12(q.dense());
    REQUIRE(p1 == 0);
    REQUIRE(p2 == 2 * static_cast<long>(n - 1));
    // sum lambda = p1 + n, sum lambda^2 = p2 + 2 p1 + n
    REQUIRE(p1 + n == n);
    REQUIRE(p2 + 2 * p1 + n == 3 * static_cast<long>(n) - 2);
  }
  CHECK_THROWS_AS(power_sums_12({mpz_class(1), mpz_class(2)}), ContractViolation);
}

TEST_CASE("multiplicity bounds") {
  const std::uint64_t n_max = 200000;
  const auto t = OmegaTable::build(n_max);
  const auto ks = k_sequence_all(t);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto rec = multiplicity_from_k(n, ks[n - 1]);
    REQUIRE(rec.m_n == n - ks[n - 1]);
    REQUIRE(rec.all_hold());
  }
  const auto r2 = multiplicity_from_k(2, 2);
  CHECK_FALSE(r2.lower_bound.has_value());
  CHECK(scan_row(r2) == "2,2,0,,,");
  const auto r8 = multiplicity_from_k(8, 3);
  CHECK(scan_row(r8).rfind("8,3,5,", 0) == 0);
  // n = 8: log 8 / log log 8 = 2.0794 / 0.7320 = 2.84
  CHECK(*r8.upper_bound == 6);
  CHECK(*r8.lower_bound == 8 - 3 - 1);
}

TEST_CASE("floor of log ratios near integers") {
  for (std::uint64_t n = 3; n <= 200000; n += 13) {
    const long double ln = std::log(static_cast<long double>(n));
    const long double v = ln / std::log(ln);
    const long double w = 1.3841L * ln / std::log(ln);
    REQUIRE(floor_log_ratio(1.0, n) == static_cast<std::int64_t>(std::floor(v)));
    REQUIRE(floor_log_ratio(1.3841, n) == static_cast<std::int64_t>(std::floor(w)));
  }
  CHECK_THROWS_AS(floor_log_ratio(1.0, 2), ContractViolation);
}

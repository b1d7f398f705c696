#include "verify.hpp"

#include <numeric>

#include "ured/arith.hpp"
#include "ured/charpoly.hpp"
#include "ured/errors.hpp"
#include "ured/matrixlab.hpp"

namespace ured::cli {

namespace {

int omega_by_trial(std::uint64_t m) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    ++count;
    while (m % p == 0) m /= p;
  }
  return count + (m > 1 ? 1 : 0);
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }
  void check(bool ok) {
    ++result_.cases;
    if (!ok) ++result_.failures;
  }
  SuiteResult done() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts, const RunConfig& cfg) {
  const std::uint64_t max_n = opts.max_n;
  if (max_n < 1) throw ContractViolation("verify: max-n must be >= 1");
  if (max_n > cfg.guards.oracle_max) {
    throw ResourceError("verify: max-n " + std::to_string(max_n) + " exceeds oracle guard " +
                        std::to_string(cfg.guards.oracle_max));
  }
  const auto table = OmegaTable::build(max_n);
  std::vector<SuiteResult> results;

  {
    Suite s("omega");
    for (std::uint64_t m = 1; m <= max_n; ++m) {
      s.check(table.omega(m) == omega_by_trial(m) &&
              unitary_divisors(m).size() == (std::size_t{1} << table.omega(m)));
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("unit_convolution");
    std::vector<std::int64_t> mu(max_n), ones(max_n, 1);
    for (std::uint64_t m = 1; m <= max_n; ++m) mu[m - 1] = mu_star(table, m);
    const auto id = unitary_convolve(mu, ones);
    for (std::uint64_t m = 1; m <= max_n; ++m) s.check(id[m - 1] == (m == 1 ? 1 : 0));
    results.push_back(std::move(s).done());
  }
  {
    Suite s("lemma1");
    for (std::uint64_t i = 1; i <= max_n; ++i) {
      for (std::uint64_t j = 1; j <= max_n; ++j) {
        std::int64_t sum = 0;
        for (std::uint64_t d : unitary_divisors(j)) {
          if (is_unitary_divisor(i, j / d)) sum += mu_star(table, d);
        }
        s.check(sum == (i == j ? 1 : 0));
      }
    }
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      for (std::uint64_t i = 1; i <= n; ++i) {
        std::int64_t sum = 0;
        for (std::uint64_t k = i; k <= n; k += i) {
          if (is_unitary_divisor(i, k)) sum += mertens_star_coprime(table, n / k, k);
        }
        s.check(sum == 1);
      }
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("histogram");
    for (std::uint64_t x = 1; x <= max_n; ++x) {
      const auto full = omega_histogram(table, x);
      for (std::uint64_t seg : {2ULL, 16ULL, 1024ULL}) s.check(omega_histogram(x, seg) == full);
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("factorization");
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const auto r = build_rstar(n);
      const auto dense_r = DenseIntMatrix::from_sparse(r, cfg.guards.dense_max);
      s.check(sparse_multiply(build_s(n), build_t(table, n), cfg.guards.dense_max) == dense_r);
      s.check(bareiss_det(dense_r) == mertens_star(table, n));
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("charpoly");
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      auto sstar = sstar_all(omega_histogram(table, n), n);
      if (opts.tamper_s2) {
        if (sstar.empty()) sstar.emplace_back(0);
        sstar.front() += 1;
      }
      const auto oracle = charpoly_oracle(n, cfg.guards.oracle_max);
      const auto formula = expand_to_monomial(charpoly_shifted(n, sstar), cfg.guards.oracle_max);
      s.check(formula == oracle);
      s.check(multiplicity_of_one(oracle) == multiplicity(table, n).m_n);
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("multiplicity_bounds");
    const auto ks = k_sequence_all(table);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      s.check(multiplicity_from_k(n, ks[n - 1]).all_hold());
      s.check(ks[n - 1] == k_from_primorial(n));
    }
    results.push_back(std::move(s).done());
  }
  {
    Suite s("trace");
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      const auto r = build_rstar(n);
      const auto q = reduced_poly(omega_histogram(table, n), n);
      const auto [p1, p2] = power_sums_12(q.dense());
      const auto sn = static_cast<long>(n);
      s.check(trace(r) == sn && p1 + sn == sn);
      s.check(trace_of_square(r) == 3 * sn - 2 && p2 + 2 * p1 + sn == 3 * sn - 2);
    }
    results.push_back(std::move(s).done());
  }
  return results;
}

void write_summary(std::ostream& out, const std::vector<SuiteResult>& results) {
  out << "suite,cases,failures\n";
  for (const auto& r : results) out << r.name << ',' << r.cases << ',' << r.failures << '\n';
}

}  // namespace ured::cli

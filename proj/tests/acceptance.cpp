// Acceptance suite: one PASS/FAIL line per criterion, tolerances printed
// alongside. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ured/arith.hpp"
#include "ured/charpoly.hpp"
#include "ured/matrixlab.hpp"
#include "ured/spectral.hpp"

using namespace ured;

namespace {

// Largest scaled error over the eigen grid, recorded from the first run.
constexpr double kFittedC = 1.387555;
constexpr double kFittedCRelTol = 1e-4;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome fixtures() {
  const std::string dir = URED_TEST_DATA_DIR;
  const auto t = OmegaTable::build(8);
  const bool r = render_dense(build_rstar(8)) == read_file(dir + "/rstar_8.txt");
  const bool s = render_dense(build_s(8)) == read_file(dir + "/s_8.txt");
  const auto t8 = build_t(t, 8);
  const bool tt = render_dense(t8) == read_file(dir + "/t_8.txt");
  const mpz_class det = bareiss_det(DenseIntMatrix::from_sparse(build_rstar(8)));
  const bool d = det == -4 && t8.at(1, 1) == -4 && mertens_star(t, 8) == -4;
  return {r && s && tt && d, "R*_8 " + std::string(r ? "ok" : "diff") + ", S_8 " +
                                 (s ? "ok" : "diff") + ", T_8 " + (tt ? "ok" : "diff") +
                                 ", det=" + det.get_str()};
}

Outcome factorization() {
  const auto t = OmegaTable::build(200);
  std::uint64_t bad_product = 0, bad_det = 0;
  for (std::uint64_t n = 2; n <= 200; ++n) {
    if (!(sparse_multiply(build_s(n), build_t(t, n)) == DenseIntMatrix::from_sparse(build_rstar(n))))
      ++bad_product;
  }
  for (std::uint64_t n = 1; n <= 60; ++n) {
    if (bareiss_det(DenseIntMatrix::from_sparse(build_rstar(n))) != mertens_star(t, n)) ++bad_det;
  }
  return {bad_product == 0 && bad_det == 0, "product mismatches=" + std::to_string(bad_product) +
                                                " det mismatches=" + std::to_string(bad_det)};
}

Outcome charpoly_vs_oracle() {
  const auto t = OmegaTable::build(60);
  const auto ks = k_sequence_all(t);
  std::uint64_t bad_poly = 0, bad_mult = 0;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const auto oracle = charpoly_oracle(n);
    if (expand_to_monomial(charpoly_shifted(omega_histogram(t, n), n)) != oracle) ++bad_poly;
    if (multiplicity_of_one(oracle) != n - ks[n - 1]) ++bad_mult;
  }
  return {bad_poly == 0 && bad_mult == 0, "polynomial mismatches=" + std::to_string(bad_poly) +
                                              " multiplicity mismatches=" + std::to_string(bad_mult)};
}

Outcome identities() {
  std::uint64_t bad_eq = 0, bad_i = 0, bad_ii = 0;
  const std::uint64_t m_max = 10000;
  const auto t = OmegaTable::build(m_max);
  std::vector<std::int64_t> mu(m_max), ones(m_max, 1);
  for (std::uint64_t m = 1; m <= m_max; ++m) mu[m - 1] = mu_star(t, m);
  const auto conv = unitary_convolve(mu, ones);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    std::int64_t s = 0;
    for (std::uint64_t d : oracle::unitary_divisors_filter(m)) s += oracle::mu_star_trial(d);
    const std::int64_t want = m == 1 ? 1 : 0;
    if (s != want || conv[m - 1] != want) ++bad_eq;
  }
  for (std::uint64_t i = 1; i <= 100; ++i) {
    for (std::uint64_t j = 1; j <= 100; ++j) {
      std::int64_t s = 0;
      for (std::uint64_t d : oracle::unitary_divisors_filter(j)) {
        if (oracle::unitary(i, j / d)) s += oracle::mu_star_trial(d);
      }
      if (s != (i == j ? 1 : 0)) ++bad_i;
    }
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t i = 1; i <= n; ++i) {
      std::int64_t s = 0, s_lib = 0;
      for (std::uint64_t k = i; k <= n; k += i) {
        if (!oracle::unitary(i, k)) continue;
        s += oracle::mertens_coprime_trial(n / k, k);
        s_lib += mertens_star_coprime(t, n / k, k);
      }
      if (s != 1 || s_lib != 1) ++bad_ii;
    }
  }
  return {bad_eq + bad_i + bad_ii == 0, "convolution failures=" + std::to_string(bad_eq) +
                                            " lemma(i) failures=" + std::to_string(bad_i) +
                                            " lemma(ii) failures=" + std::to_string(bad_ii)};
}

Outcome bounds() {
  const std::uint64_t n_max = 1000000;
  const auto t = OmegaTable::build(n_max);
  const auto ks = k_sequence_all(t);
  std::vector<mpz_class> prim;
  for (unsigned k = 0; k <= 8; ++k) prim.push_back(primorial(k));
  std::uint64_t bad_bounds = 0, bad_prim = 0;
  double worst_gap = -1e300;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto rec = multiplicity_from_k(n, ks[n - 1]);
    if (!rec.all_hold()) ++bad_bounds;
    if (rec.ostar_gap) worst_gap = std::max(worst_gap, *rec.ostar_gap);
    if (n >= 2) {
      const int k = ks[n - 1];
      if (!(prim[k - 1] <= n && n < prim[k])) ++bad_prim;
    }
  }
  return {bad_bounds == 0 && bad_prim == 0,
          "bound failures=" + std::to_string(bad_bounds) + " primorial failures=" +
              std::to_string(bad_prim) + " max ostar gap=" + fmt("%.6f", worst_gap)};
}

Outcome spectral_crosscheck() {
  const Tolerances tol;
  double worst_power = 0, worst_newton = 0;
  for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
    const auto rep = nontrivial_eigenvalues(reduced_poly(omega_histogram(n, 65536), n), n, tol);
    const auto p = dominant_power_iteration(build_rstar(n), tol.power_tol, tol.power_max_iter);
    worst_power = std::max(worst_power, std::fabs(p.estimate - rep.lambda_plus) / rep.lambda_plus);
  }
  for (std::uint64_t n : {8ULL, 30ULL, 100ULL, 1000ULL, 10000ULL}) {
    const auto rep = nontrivial_eigenvalues(reduced_poly(omega_histogram(n, 65536), n), n, tol);
    std::complex<long double> p1 = 0, p2 = 0;
    for (const auto& l : rep.eigenvalues) {
      const std::complex<long double> u(l.real() - 1.0L, l.imag());
      p1 += u;
      p2 += u * u;
    }
    const long double target = 2.0L * (n - 1);
    worst_newton = std::max<double>(worst_newton, std::abs(p1) / target);
    worst_newton = std::max<double>(worst_newton, std::abs(p2 - target) / target);
  }
  const auto t = OmegaTable::build(10000);
  std::uint64_t bad_trace = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto [p1, p2] = power_sums_12(reduced_poly(omega_histogram(t, n), n).dense());
    const long sn = static_cast<long>(n);
    if (p1 + sn != sn || p2 + 2 * p1 + sn != 3 * sn - 2) ++bad_trace;
  }
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const auto r = build_rstar(n);
    const auto sn = static_cast<std::int64_t>(n);
    if (trace(r) != sn || trace_of_square(r) != 3 * sn - 2) ++bad_trace;
  }
  return {worst_power <= 1e-8 && worst_newton <= 1e-9 && bad_trace == 0,
          "max power/roots rel diff=" + fmt("%.3e", worst_power) +
              " max power-sum rel err=" + fmt("%.3e", worst_newton) +
              " trace failures=" + std::to_string(bad_trace)};
}

Outcome proposition_trend() {
  const auto c = compute_constants();
  const Tolerances tol;
  double fitted = 0;
  std::string trail;
  for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    const auto rep = nontrivial_eigenvalues(reduced_poly(omega_histogram(n, 65536), n), n, tol);
    const auto [ap, am] = asymptotic_lambda(n, c);
    const double ep = scaled_error(rep.lambda_plus, ap, n);
    const double em = scaled_error(rep.lambda_minus, am, n);
    fitted = std::max({fitted, ep, em});
    trail += " " + fmt("%.4f", ep) + "/" + fmt("%.4f", em);
  }
  const bool fixture = std::fabs(fitted - kFittedC) <= kFittedCRelTol * kFittedC;
  return {fitted <= 5.0 && fixture,
          "fitted C=" + fmt("%.6f", fitted) + " (fixture " + fmt("%.6f", kFittedC) +
              ") scaled errors +/-:" + trail};
}

Outcome s2star_remainder() {
  const auto c = compute_constants();
  std::vector<double> r;
  for (std::uint64_t x : {10000ULL, 100000ULL, 1000000ULL}) {
    r.push_back(s2star_asymptotic_check(x, omega_histogram(x, 65536), c));
  }
  bool ok = true;
  for (double v : r) ok = ok && std::isfinite(v);
  for (std::size_t i = 1; i < r.size(); ++i) ok = ok && std::fabs(r[i]) <= 1.1 * std::fabs(r[i - 1]);
  return {ok, "remainders/sqrt(x) at 1e4,1e5,1e6 = " + fmt("%.6f", r[0]) + ", " +
                  fmt("%.6f", r[1]) + ", " + fmt("%.6f", r[2])};
}

// Same remainder with the second-order term taken as
// x (2 gamma - 1) / zeta(2) - 2x zeta'(2) / zeta(2)^2 - 2x.
void s2star_corrected_note() {
  const auto c = compute_constants();
  std::string trail;
  for (std::uint64_t x : {10000ULL, 100000ULL, 1000000ULL}) {
    const auto s = sstar_all(omega_histogram(x, 65536), x);
    const double xd = static_cast<double>(x);
    const double main = xd * std::log(xd) / c.zeta2 + xd * (2 * c.euler_gamma - 1) / c.zeta2 -
                        2 * xd * c.zeta_log_deriv_2 / c.zeta2 - 2 * xd;
    trail += " " + fmt("%.6f", (s.front().get_d() - main) / std::sqrt(xd));
  }
  std::printf("INFO [8] remainders/sqrt(x) with the 1/zeta(2)-scaled second term:%s\n",
              trail.c_str());
}

struct Criterion {
  int id;
  const char* name;
  const char* tolerance;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "8x8 fixtures", "byte-exact, det exact", 1.0, fixtures},
      {2, "S_n T_n = R*_n and Bareiss det = M*(n)", "exact", 120.0, factorization},
      {3, "characteristic polynomial vs interpolation oracle", "exact", 300.0, charpoly_vs_oracle},
      {4, "convolution and lemma identities", "exact", 60.0, identities},
      {5, "multiplicity bounds and primorial characterization", "exact", 60.0, bounds},
      {6, "spectral cross-check", "power 1e-8 rel, power sums 1e-9 rel, traces exact", 300.0,
       spectral_crosscheck},
      {7, "dominant eigenvalue trend", "C <= 5, fixture 1e-4 rel", 300.0, proposition_trend},
      {8, "S*_2 asymptotic remainder", "finite, |r| non-increasing with 10% slack", 300.0,
       s2star_remainder},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs <= c.budget_s;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("%s [%d] %s | tol: %s | %.2fs (budget %.0fs) | %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, c.tolerance, secs, c.budget_s, o.detail.c_str());
    std::fflush(stdout);
    if (c.id == 8) s2star_corrected_note();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

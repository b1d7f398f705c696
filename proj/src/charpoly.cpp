#include "ured/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>

#include <mpfr.h>

#include "ured/errors.hpp"

namespace ured {

ShiftedPoly::ShiftedPoly(std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

mpz_class ShiftedPoly::coeff(std::uint64_t exponent) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const PolyTerm& t, std::uint64_t e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : mpz_class(0);
}

ShiftedPoly ShiftedPoly::divide_by_u_power(std::uint64_t power) const {
  if (!terms_.empty() && valuation() < power) {
    throw ContractViolation("divide_by_u_power: u^" + std::to_string(power) + " does not divide");
  }
  std::vector<PolyTerm> out = terms_;
  for (auto& t : out) t.exponent -= power;
  return ShiftedPoly(std::move(out));
}

std::vector<mpz_class> ShiftedPoly::dense() const {
  std::vector<mpz_class> out(degree() + 1, mpz_class(0));
  for (const auto& t : terms_) out[t.exponent] = t.coeff;
  return out;
}

std::string ShiftedPoly::to_string(bool ascii) const {
  if (terms_.empty()) return "0";
  const char* var = ascii ? "u" : "\xCE\xBC";  // μ
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const mpz_class magnitude = abs(it->coeff);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool show_coeff = magnitude != 1 || it->exponent == 0;
    if (show_coeff) out += magnitude.get_str();
    if (it->exponent > 0) {
      out += var;
      if (it->exponent > 1) out += "^" + std::to_string(it->exponent);
    }
  }
  return out;
}

mpz_class dstar(const StirlingTable& st, int k, int omega_m) {
  if (k < 1) throw ContractViolation("dstar: k must be >= 1");
  if (omega_m < k) return 0;
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
  return factorial * st.at(omega_m, k);
}

std::vector<mpz_class> sstar_all(const OmegaHistogram& h, std::uint64_t n) {
  if (h.limit != n) throw ContractViolation("sstar_all: histogram limit differs from n");
  const int top = h.max_omega();  // k_n - 1 for n >= 2
  std::vector<mpz_class> out;
  if (top < 2) return out;
  const StirlingTable st(top, top);
  for (int k = 2; k <= top; ++k) {
    mpz_class sum = 0;
    for (int j = k; j <= top; ++j) sum += dstar(st, k, j) * mpz_class(std::to_string(h.counts[j]));
    out.push_back(std::move(sum));
  }
  return out;
}

int floor_log2(std::uint64_t n) {
  if (n == 0) throw ContractViolation("floor_log2: n must be positive");
  return std::bit_width(n) - 1;
}

ShiftedPoly charpoly_shifted(std::uint64_t n, const std::vector<mpz_class>& sstar) {
  if (n == 0) throw ContractViolation("charpoly_shifted: n must be >= 1");
  if (n == 1) return ShiftedPoly({{1, 1}});
  std::vector<PolyTerm> terms;
  terms.push_back({n, 1});
  terms.push_back({n - 2, -mpz_class(std::to_string(n - 1))});
  const int ell = floor_log2(n);
  for (int k = 2; k <= ell && static_cast<std::size_t>(k - 2) < sstar.size(); ++k) {
    terms.push_back({n - static_cast<std::uint64_t>(k) - 1, -sstar[k - 2]});
  }
  return ShiftedPoly(std::move(terms));
}

ShiftedPoly charpoly_shifted(const OmegaHistogram& h, std::uint64_t n) {
  return charpoly_shifted(n, sstar_all(h, n));
}

ShiftedPoly reduced_poly(const OmegaHistogram& h, std::uint64_t n) {
  const ShiftedPoly full = charpoly_shifted(h, n);
  const std::uint64_t k_n = n == 1 ? 0 : static_cast<std::uint64_t>(h.max_omega()) + 1;
  return full.divide_by_u_power(n - k_n);
}

std::int64_t floor_log_ratio(double c, std::uint64_t n) {
  if (n < 3) throw ContractViolation("floor_log_ratio: n must be >= 3");
  const double ln = std::log(static_cast<double>(n));
  const double value = c * ln / std::log(ln);
  const double nearest = std::round(value);
  if (std::fabs(value - nearest) > 1e-9 * std::max(1.0, std::fabs(value))) {
    return static_cast<std::int64_t>(std::floor(value));
  }
  // Too close to an integer to trust the double floor.
  mpfr_t x, lx, llx;
  mpfr_inits2(256, x, lx, llx, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(x, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_log(lx, x, MPFR_RNDN);
  mpfr_log(llx, lx, MPFR_RNDN);
  mpfr_set_d(x, c, MPFR_RNDN);  // c itself is taken at double precision
  mpfr_mul(x, x, lx, MPFR_RNDN);
  mpfr_div(x, x, llx, MPFR_RNDN);
  mpfr_floor(x, x);
  const auto out = static_cast<std::int64_t>(mpfr_get_si(x, MPFR_RNDN));
  mpfr_clears(x, lx, llx, static_cast<mpfr_ptr>(nullptr));
  return out;
}

MultiplicityRecord multiplicity_from_k(std::uint64_t n, int k_n) {
  if (n == 0) throw ContractViolation("multiplicity: n must be >= 1");
  MultiplicityRecord r;
  r.n = n;
  r.k_n = k_n;
  r.m_n = n - static_cast<std::uint64_t>(k_n);
  if (n >= 3) {
    const auto sn = static_cast<std::int64_t>(n);
    r.lower_bound = sn - floor_log_ratio(1.3841, n) - 1;
    r.upper_bound = sn - floor_log_ratio(1.0, n);
    const double ln = std::log(static_cast<double>(n));
    const double lln = std::log(ln);
    r.ostar_gap = std::fabs(static_cast<double>(r.m_n) - (static_cast<double>(n) - ln / lln)) -
                  2.0 * ln / (lln * lln);
  }
  return r;
}

MultiplicityRecord multiplicity(const OmegaTable& t, std::uint64_t n) {
  return multiplicity_from_k(n, k_sequence(t, n));
}

std::vector<mpz_class> expand_to_monomial(const ShiftedPoly& p, std::uint64_t max_degree) {
  if (p.degree() > max_degree) {
    throw ResourceError("expand_to_monomial: degree " + std::to_string(p.degree()) +
                        " exceeds guard " + std::to_string(max_degree));
  }
  std::vector<mpz_class> out(p.degree() + 1, mpz_class(0));
  mpz_class binom;
  for (const auto& t : p.terms()) {
    // (lambda - 1)^e = sum_i C(e, i) lambda^i (-1)^(e - i)
    for (std::uint64_t i = 0; i <= t.exponent; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), t.exponent, i);
      if ((t.exponent - i) % 2 == 0) {
        out[i] += t.coeff * binom;
      } else {
        out[i] -= t.coeff * binom;
      }
    }
  }
  return out;
}

std::uint64_t multiplicity_of_one(std::vector<mpz_class> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw ContractViolation("multiplicity_of_one: zero polynomial");
  std::uint64_t count = 0;
  while (coeffs.size() > 1) {
    // Synthetic division by (lambda - 1); the final carry is p(1).
    std::vector<mpz_class> quotient(coeffs.size() - 1);
    mpz_class carry = 0;
    for (std::size_t d = coeffs.size(); d-- > 1;) {
      carry += coeffs[d];
      quotient[d - 1] = carry;
    }
    if (carry + coeffs[0] != 0) break;
    coeffs = std::move(quotient);
    ++count;
  }
  return count;
}

std::pair<mpz_class, mpz_class> power_sums_12(const std::vector<mpz_class>& monic) {
  if (monic.empty() || monic.back() != 1) {
    throw ContractViolation("power_sums_12: polynomial must be monic");
  }
  const std::size_t d = monic.size() - 1;
  const mpz_class e1 = d >= 1 ? mpz_class(-monic[d - 1]) : mpz_class(0);
  const mpz_class e2 = d >= 2 ? monic[d - 2] : mpz_class(0);
  const mpz_class p1 = e1;
  const mpz_class p2 = e1 * p1 - 2 * e2;
  return {p1, p2};
}

std::string scan_row(const MultiplicityRecord& r) {
  std::string row = std::to_string(r.n) + "," + std::to_string(r.k_n) + "," + std::to_string(r.m_n) + ",";
  if (r.lower_bound) row += std::to_string(*r.lower_bound);
  row += ",";
  if (r.upper_bound) row += std::to_string(*r.upper_bound);
  row += ",";
  if (r.ostar_gap) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", *r.ostar_gap);
    row += buf;
  }
  return row;
}

}  // namespace ured

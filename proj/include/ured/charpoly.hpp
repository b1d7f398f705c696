#pragma once

// Characteristic polynomial of R*_n in the shifted variable u = lambda - 1:
//
//   det(lambda I - R*_n) = u^n - (n - 1) u^(n-2) - sum_{k=2}^{l} S*_k(n) u^(n-k-1),
//
// with l = floor(log2 n), S*_k(n) = sum_{m <= n} D*_k(m) and
// D*_k(m) = k! {omega(m) brace k}. Only the k_n + 1 or fewer nonzero terms are
// ever stored. Also the multiplicity m_n = n - k_n of the eigenvalue 1 and
// its explicit bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ured/arith.hpp"
#include "ured/config.hpp"

namespace ured {

struct PolyTerm {
  std::uint64_t exponent;
  mpz_class coeff;
  bool operator==(const PolyTerm&) const = default;
};

// Sparse exact polynomial in u = lambda - 1. Terms have strictly increasing
// exponents and nonzero coefficients.
class ShiftedPoly {
 public:
  ShiftedPoly() = default;
  // Sorts, merges equal exponents and drops zero coefficients.
  explicit ShiftedPoly(std::vector<PolyTerm> terms);

  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept { return terms_.empty() ? 0 : terms_.back().exponent; }
  // Smallest exponent present, i.e. the power of u dividing the polynomial.
  std::uint64_t valuation() const noexcept { return terms_.empty() ? 0 : terms_.front().exponent; }
  mpz_class coeff(std::uint64_t exponent) const;

  // Divides by u^power. Throws ContractViolation if u^power does not divide.
  ShiftedPoly divide_by_u_power(std::uint64_t power) const;

  // Dense coefficients in u, index = exponent.
  std::vector<mpz_class> dense() const;

  // "μ^8 - 7μ^6 - 2μ^5"; the variable is "u" when ascii is set.
  std::string to_string(bool ascii = false) const;

  bool operator==(const ShiftedPoly&) const = default;

 private:
  std::vector<PolyTerm> terms_;
};

struct MultiplicityRecord {
  std::uint64_t n = 0;
  int k_n = 0;
  std::uint64_t m_n = 0;
  // Present from n >= 3, where log log n > 0. The lower bound is proved for
  // n >= 3 and the upper one for n >= 6.
  std::optional<std::int64_t> lower_bound;
  std::optional<std::int64_t> upper_bound;
  // |m_n - (n - log n / log log n)| - 2 log n / (log log n)^2; <= 0 for n >= 3.
  std::optional<double> ostar_gap;

  bool lower_holds() const { return n < 3 || static_cast<std::int64_t>(m_n) >= *lower_bound; }
  bool upper_holds() const { return n < 6 || static_cast<std::int64_t>(m_n) <= *upper_bound; }
  bool ostar_holds() const { return n < 3 || *ostar_gap <= 0.0; }
  bool all_hold() const { return lower_holds() && upper_holds() && ostar_holds(); }
};

// k! {omega_m brace k}; zero when omega_m < k.
mpz_class dstar(const StirlingTable& st, int k, int omega_m);

// S*_k(n) for k = 2 .. k_n - 1 (slot k - 2) from the omega histogram of 1..n.
// Throws ContractViolation when h.limit != n.
std::vector<mpz_class> sstar_all(const OmegaHistogram& h, std::uint64_t n);

// floor(log2 n) via bit length.
int floor_log2(std::uint64_t n);

// Full characteristic polynomial in u. For n = 1 returns u (R*_1 = [1]).
ShiftedPoly charpoly_shifted(const OmegaHistogram& h, std::uint64_t n);
// Same, from precomputed S*_k values (slot k - 2); the hook the verifier uses
// to inject faults.
ShiftedPoly charpoly_shifted(std::uint64_t n, const std::vector<mpz_class>& sstar);

// charpoly_shifted divided by u^(m_n): degree k_n, nonzero constant term.
ShiftedPoly reduced_poly(const OmegaHistogram& h, std::uint64_t n);

// m_n, k_n and the explicit bounds.
MultiplicityRecord multiplicity(const OmegaTable& t, std::uint64_t n);
// Same, with k_n already known.
MultiplicityRecord multiplicity_from_k(std::uint64_t n, int k_n);

// floor(c log n / log log n) with extended-precision re-evaluation when the
// double result sits within rounding distance of an integer. n >= 3.
std::int64_t floor_log_ratio(double c, std::uint64_t n);

// Coefficients in lambda (index = power) of p(lambda - 1). Throws
// ResourceError when the degree exceeds max_degree.
std::vector<mpz_class> expand_to_monomial(const ShiftedPoly& p,
                                          std::uint64_t max_degree = Limits{}.oracle_max);

// Largest e such that (lambda - 1)^e divides the monomial-basis polynomial,
// by repeated synthetic division at 1.
std::uint64_t multiplicity_of_one(std::vector<mpz_class> coeffs);

// Power sums p_1, p_2 of the roots of a monic polynomial given in dense
// ascending coefficients, via Newton's identities in exact arithmetic.
std::pair<mpz_class, mpz_class> power_sums_12(const std::vector<mpz_class>& monic);

// "n,k_n,m_n,lower,upper,ostar_gap" row; bounds empty where undefined.
std::string scan_row(const MultiplicityRecord& r);
inline constexpr const char* kScanHeader = "n,k_n,m_n,lower,upper,ostar_gap";

}  // namespace ured

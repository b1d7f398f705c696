#pragma once

// Non-trivial eigenvalues of R*_n. They are lambda = 1 + u for the k_n roots u
// of the reduced polynomial, found with Aberth-Ehrlich iteration and polished
// by Newton. Sparse power iteration gives an independent lambda_+, and the
// dominant pair is compared with
//
//   lambda_pm ~ +-sqrt(n) + log n / (2 zeta(2)) + gamma - 1/2 - zeta'(2)/zeta(2).

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ured/arith.hpp"
#include "ured/charpoly.hpp"
#include "ured/config.hpp"
#include "ured/matrixlab.hpp"

namespace ured {

enum class EigenMethod { Roots, Power };

const char* to_string(EigenMethod method);

struct EigenReport {
  std::uint64_t n = 0;
  std::vector<std::complex<double>> eigenvalues;  // lambda, sorted by real part
  std::vector<double> residuals;                  // relative backward error per root
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  EigenMethod method = EigenMethod::Roots;
};

struct AsymptoticConstants {
  double euler_gamma = 0.0;
  double zeta2 = 0.0;
  double zeta_log_deriv_2 = 0.0;  // zeta'(2) / zeta(2)
  int precision = 0;              // decimal digits guaranteed

  // gamma - 1/2 - zeta'(2)/zeta(2)
  double lambda_offset() const { return euler_gamma - 0.5 - zeta_log_deriv_2; }
};

// Independent evaluations kept for self-checking.
namespace constants {
// Harmonic sum with Euler-Maclaurin tail.
long double euler_gamma_series();
// Brent-McMillan Bessel-function formula.
long double euler_gamma_bessel();
// Direct sum of 1/m^2 with Euler-Maclaurin tail.
long double zeta2_series();
// -sum log m / m^2 with Euler-Maclaurin tail.
long double zeta_prime2_series();
// Through the alternating eta function, accelerated.
long double zeta_prime2_eta();
}  // namespace constants

// gamma, zeta(2), zeta'(2)/zeta(2). Requires 8 <= digits <= 15; throws
// NumericFailure if the two independent routes disagree at that precision.
AsymptoticConstants compute_constants(int digits = 12);

// Evaluate q at complex u with long double Horner. Coefficients dense ascending.
std::complex<long double> evaluate(const std::vector<long double>& coeffs,
                                   std::complex<long double> u);

// All roots of the reduced polynomial q. Residual of a root u is
// |q(u)| / sum_i |c_i| |u|^i. Throws NumericFailure if the iteration does not
// converge or a residual exceeds tol.
EigenReport nontrivial_eigenvalues(const ShiftedPoly& q, std::uint64_t n,
                                   const Tolerances& tol = {});

struct PowerResult {
  double estimate = 0.0;
  int iterations = 0;
};

// Rayleigh quotient power iteration from the all-ones vector. Stops when two
// successive estimates differ by less than tol (relative to the estimate).
PowerResult dominant_power_iteration(const SparseUnitaryMatrix& m, double tol, int max_iter);

// The main terms (lambda_+, lambda_-) of the dominant-eigenvalue expansion.
std::pair<double, double> asymptotic_lambda(std::uint64_t n, const AsymptoticConstants& c);

// (S*_2(x) - x log x / zeta(2) - 2x (gamma - 3/2 - zeta'(2)/zeta(2))) / sqrt(x),
// with S*_2 from the Stirling definition.
double s2star_asymptotic_check(std::uint64_t x, const OmegaHistogram& h,
                               const AsymptoticConstants& c);

// |lambda - asym| sqrt(n) / log^2 n
double scaled_error(double lambda, double asym, std::uint64_t n);

inline constexpr const char* kEigenScanHeader =
    "n,lambda_plus,lambda_minus,asym_plus,asym_minus,err_plus_scaled,err_minus_scaled";
std::string eigen_scan_row(const EigenReport& r, const AsymptoticConstants& c);

}  // namespace ured

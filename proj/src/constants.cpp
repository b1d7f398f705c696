// Euler's gamma, zeta(2) and zeta'(2), each by two independent routes.

#include <cmath>
#include <numbers>
#include <string>

#include "ured/errors.hpp"
#include "ured/spectral.hpp"

namespace ured {

namespace constants {

namespace {

constexpr int kTailStart = 1000;

}  // namespace

long double euler_gamma_series() {
  // H_N - log N - 1/(2N) + 1/(12N^2) - 1/(120N^4) + 1/(252N^6) - ...
  constexpr int n = 10000;
  long double h = 0.0L;
  for (int m = n; m >= 1; --m) h += 1.0L / m;
  const long double x = n;
  const long double x2 = x * x;
  return h - std::log(x) - 1.0L / (2 * x) + 1.0L / (12 * x2) - 1.0L / (120 * x2 * x2) +
         1.0L / (252 * x2 * x2 * x2);
}

long double euler_gamma_bessel() {
  // gamma = A/B - log N with B = sum (N^k/k!)^2, A = sum (N^k/k!)^2 H_k,
  // error O(exp(-4N)).
  constexpr int n = 12;
  const long double log_n = std::log(static_cast<long double>(n));
  long double term = 1.0L;  // (N^k / k!)^2
  long double harmonic = 0.0L;
  long double a = 0.0L;
  long double b = 0.0L;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      const long double ratio = static_cast<long double>(n) / k;
      term *= ratio * ratio;
      harmonic += 1.0L / k;
    }
    a += term * harmonic;
    b += term;
    if (k > 4 * n && term < 1e-30L * b) break;
  }
  return a / b - log_n;
}

long double zeta2_series() {
  long double s = 0.0L;
  for (int m = kTailStart - 1; m >= 1; --m) s += 1.0L / (static_cast<long double>(m) * m);
  const long double x = kTailStart;
  // sum_{m >= N} f(m) = int_N^inf f + f(N)/2 - f'(N)/12 + f'''(N)/720 - f^(5)(N)/30240
  const long double f = 1.0L / (x * x);
  const long double f1 = -2.0L / (x * x * x);
  const long double f3 = -24.0L / std::pow(x, 5);
  const long double f5 = -720.0L / std::pow(x, 7);
  return s + 1.0L / x + f / 2 - f1 / 12 + f3 / 720 - f5 / 30240;
}

long double zeta_prime2_series() {
  long double s = 0.0L;
  for (int m = kTailStart - 1; m >= 2; --m) {
    const long double x = m;
    s += std::log(x) / (x * x);
  }
  const long double x = kTailStart;
  const long double lx = std::log(x);
  // f = log x / x^2 and its odd derivatives
  const long double f = lx / (x * x);
  const long double f1 = (1.0L - 2.0L * lx) / std::pow(x, 3);
  const long double f3 = (26.0L - 24.0L * lx) / std::pow(x, 5);
  const long double f5 = (1044.0L - 720.0L * lx) / std::pow(x, 7);
  const long double tail = (lx + 1.0L) / x + f / 2 - f1 / 12 + f3 / 720 - f5 / 30240;
  return -(s + tail);
}

long double zeta_prime2_eta() {
  // eta'(2) = sum_{m >= 1} (-1)^m log m / m^2, summed with the
  // Cohen-Rodriguez Villegas-Zagier acceleration. Then
  // zeta'(2) = 2 eta'(2) - log 2 zeta(2).
  constexpr int terms = 40;
  long double d = std::pow(3.0L + std::sqrt(8.0L), terms);
  d = (d + 1.0L / d) / 2;
  long double b = -1.0L;
  long double c = -d;
  long double s = 0.0L;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    const long double m = k + 1;
    s += c * std::log(m) / (m * m);  // a_k of sum (-1)^k a_k
    b = (static_cast<long double>(k) + terms) * (static_cast<long double>(k) - terms) * b /
        ((k + 0.5L) * (k + 1.0L));
  }
  const long double eta_prime = -s / d;
  const long double zeta2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
  return 2.0L * eta_prime - std::log(2.0L) * zeta2;
}

}  // namespace constants

AsymptoticConstants compute_constants(int digits) {
  if (digits < 8 || digits > 15) throw ContractViolation("compute_constants: digits must be in 8..15");
  const long double tol = std::pow(10.0L, -digits);
  auto agree = [tol](long double a, long double b, const char* name) {
    if (std::fabs(a - b) > tol * std::max(1.0L, std::fabs(a))) {
      throw NumericFailure(std::string("compute_constants: routes for ") + name + " disagree",
                           static_cast<double>(a));
    }
  };
  const long double gamma = constants::euler_gamma_series();
  agree(gamma, constants::euler_gamma_bessel(), "gamma");
  const long double zeta2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
  agree(zeta2, constants::zeta2_series(), "zeta(2)");
  const long double zp = constants::zeta_prime2_series();
  agree(zp, constants::zeta_prime2_eta(), "zeta'(2)");

  AsymptoticConstants c;
  c.euler_gamma = static_cast<double>(gamma);
  c.zeta2 = static_cast<double>(zeta2);
  c.zeta_log_deriv_2 = static_cast<double>(zp / zeta2);
  c.precision = digits;
  return c;
}

}  // namespace ured

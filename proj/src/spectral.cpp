#include "ured/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "ured/errors.hpp"

namespace ured {

namespace {

using cld = std::complex<long double>;

// q and q' at u.
std::pair<cld, cld> evaluate_with_derivative(const std::vector<long double>& c, cld u) {
  cld p = c.back();
  cld dp = 0.0L;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * u + p;
    p = p * u + c[i];
  }
  return {p, dp};
}

long double backward_scale(const std::vector<long double>& c, cld u) {
  const long double r = std::abs(u);
  long double s = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) s = s * r + std::fabs(c[i]);
  return s;
}

// Fujiwara bound on the root moduli of a monic polynomial.
long double root_radius(const std::vector<long double>& c) {
  const std::size_t d = c.size() - 1;
  long double r = 0.0L;
  for (std::size_t i = 0; i < d; ++i) {
    long double a = std::fabs(c[i]);
    if (i == 0) a /= 2;
    r = std::max(r, std::pow(a, 1.0L / static_cast<long double>(d - i)));
  }
  return 2 * r;
}

}  // namespace

const char* to_string(EigenMethod method) {
  return method == EigenMethod::Roots ? "roots" : "power";
}

std::complex<long double> evaluate(const std::vector<long double>& coeffs,
                                   std::complex<long double> u) {
  return evaluate_with_derivative(coeffs, u).first;
}

EigenReport nontrivial_eigenvalues(const ShiftedPoly& q, std::uint64_t n, const Tolerances& tol) {
  if (q.degree() < 2) throw ContractViolation("nontrivial_eigenvalues: degree must be >= 2");
  if (!(tol.root_tol > 0)) throw ContractViolation("nontrivial_eigenvalues: tol must be positive");
  const auto exact = q.dense();
  if (exact.back() != 1) throw ContractViolation("nontrivial_eigenvalues: q must be monic");
  std::vector<long double> c;
  c.reserve(exact.size());
  for (const auto& v : exact) c.push_back(std::stold(v.get_str()));

  const std::size_t d = c.size() - 1;
  const long double radius = root_radius(c);
  std::vector<cld> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  // Aberth-Ehrlich: z_k -= w / (1 - w sum_{j != k} 1/(z_k - z_j)), w = q/q'.
  constexpr long double kStep = 64 * std::numeric_limits<long double>::epsilon();
  bool converged = false;
  int iter = 0;
  for (; iter < tol.root_max_iter && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < d; ++k) {
      const auto [p, dp] = evaluate_with_derivative(c, z[k]);
      if (p == cld(0)) continue;
      const cld w = p / dp;
      cld repulsion = 0.0L;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const cld step = w / (1.0L - w * repulsion);
      z[k] -= step;
      if (std::abs(step) > kStep * std::max(1.0L, std::abs(z[k]))) converged = false;
    }
  }

  EigenReport report;
  report.n = n;
  report.method = EigenMethod::Roots;
  long double worst = 0.0L;
  for (auto& u : z) {
    // One Newton polish.
    const auto [p, dp] = evaluate_with_derivative(c, u);
    if (dp != cld(0)) u -= p / dp;
    const long double residual = std::abs(evaluate(c, u)) / backward_scale(c, u);
    worst = std::max(worst, residual);
  }
  std::sort(z.begin(), z.end(), [](const cld& a, const cld& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const auto& u : z) {
    report.eigenvalues.emplace_back(static_cast<double>(u.real() + 1.0L),
                                    static_cast<double>(u.imag()));
    report.residuals.push_back(
        static_cast<double>(std::abs(evaluate(c, u)) / backward_scale(c, u)));
  }
  report.lambda_minus = report.eigenvalues.front().real();
  report.lambda_plus = report.eigenvalues.back().real();

  if (!converged && worst > tol.root_tol) {
    throw NumericFailure("nontrivial_eigenvalues: no convergence after " + std::to_string(iter) +
                             " Aberth sweeps",
                         report.lambda_plus);
  }
  if (worst > tol.root_tol) {
    throw NumericFailure("nontrivial_eigenvalues: residual above tolerance", report.lambda_plus);
  }
  return report;
}

PowerResult dominant_power_iteration(const SparseUnitaryMatrix& m, double tol, int max_iter) {
  if (m.kind() != MatrixKind::RStar) {
    throw ContractViolation("dominant_power_iteration: matrix must be R*_n");
  }
  if (!(tol > 0)) throw ContractViolation("dominant_power_iteration: tol must be positive");
  const std::size_t n = m.size();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double estimate = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    matvec(m, x, y);
    // x has unit norm, so x.y is the Rayleigh quotient.
    const double rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (norm == 0.0) throw NumericFailure("dominant_power_iteration: iterate vanished", rq);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (it > 1 && std::fabs(rq - estimate) < tol * std::max(1.0, std::fabs(rq))) {
      return {rq, it};
    }
    estimate = rq;
  }
  throw NumericFailure("dominant_power_iteration: no convergence in " + std::to_string(max_iter) +
                           " iterations",
                       estimate);
}

std::pair<double, double> asymptotic_lambda(std::uint64_t n, const AsymptoticConstants& c) {
  if (n < 3) throw ContractViolation("asymptotic_lambda: n must be >= 3");
  const double root = std::sqrt(static_cast<double>(n));
  const double shift = std::log(static_cast<double>(n)) / (2 * c.zeta2) + c.lambda_offset();
  return {root + shift, -root + shift};
}

double s2star_asymptotic_check(std::uint64_t x, const OmegaHistogram& h,
                               const AsymptoticConstants& c) {
  if (x < 100) throw ContractViolation("s2star_asymptotic_check: x must be >= 100");
  const auto sstar = sstar_all(h, x);
  const double s2 = sstar.empty() ? 0.0 : sstar.front().get_d();
  const double xd = static_cast<double>(x);
  const double main = xd * std::log(xd) / c.zeta2 +
                      2 * xd * (c.euler_gamma - 1.5 - c.zeta_log_deriv_2);
  return (s2 - main) / std::sqrt(xd);
}

double scaled_error(double lambda, double asym, std::uint64_t n) {
  const double ln = std::log(static_cast<double>(n));
  return std::fabs(lambda - asym) * std::sqrt(static_cast<double>(n)) / (ln * ln);
}

std::string eigen_scan_row(const EigenReport& r, const AsymptoticConstants& c) {
  const auto [ap, am] = asymptotic_lambda(r.n, c);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu,%.12f,%.12f,%.12f,%.12f,%.9f,%.9f",
                static_cast<unsigned long long>(r.n), r.lambda_plus, r.lambda_minus, ap, am,
                scaled_error(r.lambda_plus, ap, r.n), scaled_error(r.lambda_minus, am, r.n));
  return buf;
}

}  // namespace ured

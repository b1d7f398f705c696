// Command-line front end: matrices, determinants, characteristic polynomials,
// multiplicity scans, eigenvalues and the cross-check suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource guard, 4 numeric failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "ured/arith.hpp"
#include "ured/charpoly.hpp"
#include "ured/config.hpp"
#include "ured/errors.hpp"
#include "ured/matrixlab.hpp"
#include "ured/spectral.hpp"
#include "verify.hpp"

namespace {

using namespace ured;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kResource = 3,
  kNumeric = 4,
};

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

std::string format_double(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string render_monomial(const std::vector<mpz_class>& coeffs, bool ascii) {
  const char* var = ascii ? "l" : "\xCE\xBB";  // λ
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const auto& c = coeffs[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || d == 0) out += magnitude.get_str();
    if (d > 0) out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

struct Flags {
  RunConfig cfg;
  std::string config_path;
  bool ascii = false;

  std::uint64_t n = 8;
  std::vector<std::uint64_t> ns;
  std::string kind = "rstar";
  std::string format = "dense";
  std::string det_method = "sieve";
  std::string basis = "shifted";
  bool check_oracle = false;
  bool reduced = false;
  std::uint64_t from = 1;
  std::uint64_t to = 1000;
  std::string eig_method = "roots";
  std::string eig_format = "table";
  bool compare = false;
  std::uint64_t max_n = 60;
  bool tamper_s2 = false;
};

int cmd_matrix(Flags& f) {
  if (f.n < 1) throw ContractViolation("--n must be >= 1");
  SparseUnitaryMatrix m = [&] {
    if (f.kind == "rstar") return build_rstar(f.n);
    if (f.kind == "s") return build_s(f.n);
    return build_t(OmegaTable::build(f.n), f.n);
  }();
  Output out(f.cfg.output);
  *out << (f.format == "csv" ? render_csv(m) : render_dense(m, f.cfg.guards.dense_max));
  return kOk;
}

int cmd_det(Flags& f) {
  if (f.n < 1) throw ContractViolation("--n must be >= 1");
  Output out(f.cfg.output);
  if (f.det_method == "bareiss") {
    *out << bareiss_det(DenseIntMatrix::from_sparse(build_rstar(f.n), f.cfg.guards.dense_max)).get_str()
         << '\n';
  } else {
    *out << mertens_star(OmegaTable::build(f.n), f.n) << '\n';
  }
  return kOk;
}

int cmd_charpoly(Flags& f) {
  if (f.n < 1) throw ContractViolation("--n must be >= 1");
  const auto h = omega_histogram(f.n, f.cfg.segment_size);
  const ShiftedPoly full = charpoly_shifted(h, f.n);
  Output out(f.cfg.output);
  if (f.basis == "monomial") {
    const auto coeffs = expand_to_monomial(full, f.cfg.guards.oracle_max);
    *out << render_monomial(coeffs, f.ascii) << '\n';
  } else {
    *out << (f.reduced ? reduced_poly(h, f.n) : full).to_string(f.ascii) << '\n';
  }
  if (f.check_oracle) {
    const auto oracle = charpoly_oracle(f.n, f.cfg.guards.oracle_max);
    if (expand_to_monomial(full, f.cfg.guards.oracle_max) != oracle) {
      std::cerr << "charpoly: formula disagrees with oracle " << render_monomial(oracle, f.ascii)
                << '\n';
      return kVerifyFailed;
    }
    std::cerr << "charpoly: oracle agrees\n";
  }
  return kOk;
}

int cmd_scan_mult(Flags& f) {
  if (f.from < 1 || f.from > f.to) throw ContractViolation("need 1 <= --from <= --to");
  const auto table = OmegaTable::build(f.to);
  const auto ks = k_sequence_all(table);
  const std::uint64_t count = f.to - f.from + 1;
  std::vector<std::string> rows(count);
  std::uint64_t failures = 0;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(+ : failures)
  for (std::int64_t i = 0; i < total; ++i) {
    const std::uint64_t n = f.from + static_cast<std::uint64_t>(i);
    const auto rec = multiplicity_from_k(n, ks[n - 1]);
    if (!rec.all_hold() || (n >= 2 && ks[n - 1] != k_from_primorial(n))) ++failures;
    rows[i] = scan_row(rec);
  }
  Output out(f.cfg.output);
  *out << kScanHeader << '\n';
  for (const auto& r : rows) *out << r << '\n';
  if (failures > 0) {
    std::cerr << "scan-mult: " << failures << " rows violate a bound\n";
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_eigs(Flags& f) {
  if (f.ns.empty()) f.ns.push_back(f.n);
  const bool csv = f.eig_format == "csv";
  if (csv && !f.compare) throw ContractViolation("--format csv needs --compare");
  const auto constants = compute_constants();
  Output out(f.cfg.output);
  if (csv) *out << kEigenScanHeader << '\n';
  for (std::uint64_t n : f.ns) {
    if (n < 2) throw ContractViolation("eigs: n must be >= 2");
    if (f.compare && n < 3) throw ContractViolation("eigs: --compare needs n >= 3");
    const auto h = omega_histogram(n, f.cfg.segment_size);
    const auto q = reduced_poly(h, n);
    if (f.eig_method == "power") {
      const auto power = dominant_power_iteration(build_rstar(n), f.cfg.tolerances.power_tol,
                                                  f.cfg.tolerances.power_max_iter);
      *out << "n=" << n << " method=power iterations=" << power.iterations
           << " lambda_plus=" << format_double(power.estimate) << '\n';
      if (f.compare) {
        const auto roots = nontrivial_eigenvalues(q, n, f.cfg.tolerances);
        const double ap = asymptotic_lambda(n, constants).first;
        *out << "  roots_lambda_plus=" << format_double(roots.lambda_plus) << " rel_diff="
             << format_double(std::fabs(power.estimate - roots.lambda_plus) / roots.lambda_plus, 15)
             << " asym_plus=" << format_double(ap)
             << " err_plus_scaled=" << format_double(scaled_error(power.estimate, ap, n), 9) << '\n';
      }
      continue;
    }
    const auto rep = nontrivial_eigenvalues(q, n, f.cfg.tolerances);
    if (csv) {
      *out << eigen_scan_row(rep, constants) << '\n';
      continue;
    }
    *out << "n=" << n << " method=roots k_n=" << q.degree() << " m_n=" << n - q.degree() << '\n';
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
      const auto& l = rep.eigenvalues[i];
      *out << "  lambda=" << format_double(l.real());
      if (l.imag() != 0.0) *out << (l.imag() < 0 ? " - " : " + ") << format_double(std::fabs(l.imag())) << "i";
      char res[32];
      std::snprintf(res, sizeof res, "%.3e", rep.residuals[i]);
      *out << " residual=" << res << '\n';
    }
    *out << "  lambda_plus=" << format_double(rep.lambda_plus)
         << " lambda_minus=" << format_double(rep.lambda_minus) << '\n';
    if (f.compare) {
      const auto [ap, am] = asymptotic_lambda(n, constants);
      *out << "  asym_plus=" << format_double(ap) << " asym_minus=" << format_double(am)
           << " err_plus_scaled=" << format_double(scaled_error(rep.lambda_plus, ap, n), 9)
           << " err_minus_scaled=" << format_double(scaled_error(rep.lambda_minus, am, n), 9)
           << '\n';
    }
  }
  return kOk;
}

int cmd_verify(Flags& f) {
  const auto results = cli::run_verification({f.max_n, f.tamper_s2}, f.cfg);
  Output out(f.cfg.output);
  cli::write_summary(*out, results);
  for (const auto& r : results) {
    if (r.failures > 0) return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary Redheffer matrix toolkit"};
  app.require_subcommand(1);
  Flags f;
  f.cfg.threads = omp_get_max_threads();

  // The config file supplies defaults, so it is read before flags are bound.
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
    if (path.empty()) continue;
    try {
      f.cfg = load_run_config(path, f.cfg);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

  app.add_option("--config", f.config_path, "JSON file with RunConfig keys");
  app.add_option("--threads", f.cfg.threads, "OpenMP thread count")->check(CLI::PositiveNumber);
  app.add_option("--segment-size", f.cfg.segment_size, "Histogram segment length")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  app.add_option("--root-tol", f.cfg.tolerances.root_tol, "Root residual tolerance");
  app.add_option("--power-tol", f.cfg.tolerances.power_tol, "Power iteration tolerance");
  app.add_option("--max-iter", f.cfg.tolerances.power_max_iter, "Power iteration cap");
  app.add_option("--dense-max", f.cfg.guards.dense_max, "Dense matrix guard");
  app.add_option("--oracle-max", f.cfg.guards.oracle_max, "Characteristic polynomial oracle guard");
  app.add_option("-o,--out", f.cfg.output, "Output path (default stdout)");
  app.add_flag("--ascii", f.ascii, "Render the variable as u / l instead of Greek letters");

  auto* matrix = app.add_subcommand("matrix", "Print R*_n, S_n or T_n");
  matrix->add_option("--n", f.n, "Dimension")->required();
  matrix->add_option("--kind", f.kind)->check(CLI::IsMember({"rstar", "s", "t"}));
  matrix->add_option("--format", f.format)->check(CLI::IsMember({"dense", "csv"}));

  auto* det = app.add_subcommand("det", "Determinant of R*_n");
  det->add_option("--n", f.n)->required();
  det->add_option("--method", f.det_method)->check(CLI::IsMember({"sieve", "bareiss"}));

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of R*_n");
  charpoly->add_option("--n", f.n)->required();
  charpoly->add_option("--basis", f.basis)->check(CLI::IsMember({"shifted", "monomial"}));
  charpoly->add_flag("--check-oracle", f.check_oracle, "Compare with the interpolation oracle");
  charpoly->add_flag("--reduced", f.reduced, "Divide out the eigenvalue-1 factor");

  auto* scan = app.add_subcommand("scan-mult", "CSV of k_n, m_n and bounds over a range");
  scan->add_option("--from", f.from);
  scan->add_option("--to", f.to);

  auto* eigs = app.add_subcommand("eigs", "Non-trivial eigenvalues of R*_n");
  eigs->add_option("--n", f.ns, "One or more dimensions")->required();
  eigs->add_option("--method", f.eig_method)->check(CLI::IsMember({"roots", "power"}));
  eigs->add_flag("--compare", f.compare, "Add the asymptotic comparison");
  eigs->add_option("--format", f.eig_format)->check(CLI::IsMember({"table", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
  verify->add_option("--max-n", f.max_n);
  verify->add_flag("--tamper-s2", f.tamper_s2)->group("");  // fault-injection hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_environment(f.cfg);
    f.cfg.validate();
    omp_set_num_threads(f.cfg.threads);

    if (*matrix) return cmd_matrix(f);
    if (*det) return cmd_det(f);
    if (*charpoly) return cmd_charpoly(f);
    if (*scan) return cmd_scan_mult(f);
    if (*eigs) return cmd_eigs(f);
    if (*verify) return cmd_verify(f);
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kResource;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

#include "ured/matrixlab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ured/errors.hpp"

namespace ured {

namespace {

void check_dense_guard(std::uint64_t n, std::uint64_t dense_max, const char* what) {
  if (n > dense_max) {
    throw ResourceError(std::string(what) + ": dimension " + std::to_string(n) +
                        " exceeds dense guard " + std::to_string(dense_max));
  }
}

// Appends the columns j = i k <= n with gcd(i, k) = 1, i.e. every j with i || j.
void push_unitary_multiples(std::uint64_t i, std::uint64_t n, std::vector<MatrixEntry>& out) {
  for (std::uint64_t k = 1; i * k <= n; ++k) {
    if (std::gcd(i, k) == 1) out.push_back({static_cast<std::uint32_t>(i * k), 1});
  }
}

void check_dimension(std::uint64_t n, const char* what) {
  if (n == 0) throw ContractViolation(std::string(what) + ": n must be >= 1");
  if (n > Limits::kMaxSieveLimit) throw ResourceError(std::string(what) + ": n exceeds 2^31");
}

}  // namespace

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::RStar: return "rstar";
    case MatrixKind::S: return "s";
    case MatrixKind::T: return "t";
  }
  return "?";
}

SparseUnitaryMatrix::SparseUnitaryMatrix(std::uint64_t n, MatrixKind kind,
                                         std::vector<std::uint64_t> row_start,
                                         std::vector<MatrixEntry> entries)
    : n_(n), kind_(kind), row_start_(std::move(row_start)), entries_(std::move(entries)) {
  if (row_start_.size() != n_ + 1 || row_start_.back() != entries_.size()) {
    throw ContractViolation("SparseUnitaryMatrix: inconsistent row offsets");
  }
}

std::span<const MatrixEntry> SparseUnitaryMatrix::row(std::uint64_t i) const {
  if (i < 1 || i > n_) throw ContractViolation("row index out of range");
  return std::span<const MatrixEntry>(entries_).subspan(row_start_[i - 1],
                                                        row_start_[i] - row_start_[i - 1]);
}

std::int64_t SparseUnitaryMatrix::at(std::uint64_t i, std::uint64_t j) const {
  if (j < 1 || j > n_) throw ContractViolation("column index out of range");
  const auto r = row(i);
  const auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const MatrixEntry& e, std::uint64_t c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->value : 0;
}

DenseIntMatrix::DenseIntMatrix(std::uint64_t n, std::uint64_t dense_max) : n_(n) {
  check_dense_guard(n, dense_max, "DenseIntMatrix");
  data_.assign(n * n, mpz_class(0));
}

DenseIntMatrix DenseIntMatrix::identity(std::uint64_t n, std::uint64_t dense_max) {
  DenseIntMatrix m(n, dense_max);
  for (std::uint64_t i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

DenseIntMatrix DenseIntMatrix::from_sparse(const SparseUnitaryMatrix& s, std::uint64_t dense_max) {
  DenseIntMatrix m(s.size(), dense_max);
  for (std::uint64_t i = 1; i <= s.size(); ++i) {
    for (const auto& e : s.row(i)) m(i, e.col) = static_cast<long>(e.value);
  }
  return m;
}

SparseUnitaryMatrix build_rstar(std::uint64_t n) {
  check_dimension(n, "build_rstar");
  std::vector<std::uint64_t> starts{0};
  std::vector<MatrixEntry> entries;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (i > 1) entries.push_back({1, 1});
    push_unitary_multiples(i, n, entries);
    starts.push_back(entries.size());
  }
  return SparseUnitaryMatrix(n, MatrixKind::RStar, std::move(starts), std::move(entries));
}

SparseUnitaryMatrix build_s(std::uint64_t n) {
  check_dimension(n, "build_s");
  std::vector<std::uint64_t> starts{0};
  std::vector<MatrixEntry> entries;
  for (std::uint64_t i = 1; i <= n; ++i) {
    push_unitary_multiples(i, n, entries);
    starts.push_back(entries.size());
  }
  return SparseUnitaryMatrix(n, MatrixKind::S, std::move(starts), std::move(entries));
}

SparseUnitaryMatrix build_t(const OmegaTable& t, std::uint64_t n) {
  check_dimension(n, "build_t");
  if (n > t.limit()) throw ContractViolation("build_t: n exceeds omega table limit");
  std::vector<std::uint64_t> starts{0};
  std::vector<MatrixEntry> entries;
  for (std::uint64_t i = 1; i <= n; ++i) {
    // Zero values in column 1 are not stored.
    const std::int64_t first = mertens_star_coprime(t, n / i, i);
    if (first != 0) entries.push_back({1, first});
    if (i > 1) entries.push_back({static_cast<std::uint32_t>(i), 1});
    starts.push_back(entries.size());
  }
  return SparseUnitaryMatrix(n, MatrixKind::T, std::move(starts), std::move(entries));
}

DenseIntMatrix sparse_multiply(const SparseUnitaryMatrix& a, const SparseUnitaryMatrix& b,
                               std::uint64_t dense_max) {
  if (a.size() != b.size()) throw ContractViolation("sparse_multiply: dimension mismatch");
  const std::uint64_t n = a.size();
  DenseIntMatrix out(n, dense_max);
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (const auto& ea : a.row(i)) {
      for (const auto& eb : b.row(ea.col)) {
        out(i, eb.col) += mpz_class(static_cast<long>(ea.value)) * static_cast<long>(eb.value);
      }
    }
  }
  return out;
}

mpz_class bareiss_det(DenseIntMatrix m) {
  const std::uint64_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (m(k, k) == 0) {
      std::uint64_t pivot = k + 1;
      while (pivot <= n && m(pivot, k) == 0) ++pivot;
      if (pivot > n) return 0;
      for (std::uint64_t j = k; j <= n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::uint64_t i = k + 1; i <= n; ++i) {
      for (std::uint64_t j = k + 1; j <= n; ++j) {
        // m_ij <- (m_ij m_kk - m_ik m_kj) / prev, an exact division.
        tmp = m(i, j) * m(k, k);
        tmp -= m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n, n);
}

std::vector<mpz_class> charpoly_oracle(std::uint64_t n, std::uint64_t oracle_max) {
  if (n == 0) throw ContractViolation("charpoly_oracle: n must be >= 1");
  if (n > oracle_max) {
    throw ResourceError("charpoly_oracle: n = " + std::to_string(n) + " exceeds oracle guard " +
                        std::to_string(oracle_max));
  }
  const auto r = build_rstar(n);
  const auto base = DenseIntMatrix::from_sparse(r, n);

  // values[x] = det(x I - R*_n) for x = 0..n
  std::vector<mpz_class> values(n + 1);
  const auto nodes = static_cast<std::int64_t>(n + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t x = 0; x < nodes; ++x) {
    DenseIntMatrix a(n, n);
    for (std::uint64_t i = 1; i <= n; ++i) {
      for (std::uint64_t j = 1; j <= n; ++j) a(i, j) = -base(i, j);
      a(i, i) += x;
    }
    values[x] = bareiss_det(std::move(a));
  }

  // Newton form on nodes 0..n: coefficient k is the k-th forward difference
  // at 0 divided by k!, exact for an integer polynomial.
  std::vector<mpz_class> diff = values;
  std::vector<mpz_class> newton(n + 1);
  mpz_class factorial = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    if (!mpz_divisible_p(diff[0].get_mpz_t(), factorial.get_mpz_t())) {
      throw std::logic_error("charpoly_oracle: non-integral divided difference");
    }
    mpz_divexact(newton[k].get_mpz_t(), diff[0].get_mpz_t(), factorial.get_mpz_t());
    for (std::uint64_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }

  // p = c_n; p <- p (x - k) + c_k for k = n-1 .. 0
  std::vector<mpz_class> coeffs{newton[n]};
  for (std::uint64_t k = n; k-- > 0;) {
    std::vector<mpz_class> next(coeffs.size() + 1, mpz_class(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * static_cast<unsigned long>(k);
    }
    next[0] += newton[k];
    coeffs = std::move(next);
  }

  for (std::uint64_t x = 0; x <= n; ++x) {
    mpz_class acc = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * static_cast<unsigned long>(x) + coeffs[d];
    if (acc != values[x]) throw std::logic_error("charpoly_oracle: interpolant misses a node");
  }
  return coeffs;
}

void matvec_serial(const SparseUnitaryMatrix& m, std::span<const double> v, std::span<double> y) {
  if (v.size() != m.size() || y.size() != m.size()) {
    throw ContractViolation("matvec: vector length mismatch");
  }
  const auto starts = m.row_start();
  const auto entries = m.entries();
  for (std::uint64_t i = 0; i < m.size(); ++i) {
    double sum = 0.0;
    for (std::uint64_t e = starts[i]; e < starts[i + 1]; ++e) {
      sum += static_cast<double>(entries[e].value) * v[entries[e].col - 1];
    }
    y[i] = sum;
  }
}

void matvec(const SparseUnitaryMatrix& m, std::span<const double> v, std::span<double> y) {
  if (v.size() != m.size() || y.size() != m.size()) {
    throw ContractViolation("matvec: vector length mismatch");
  }
  const auto starts = m.row_start();
  const auto entries = m.entries();
  const auto n = static_cast<std::int64_t>(m.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::uint64_t e = starts[i]; e < starts[i + 1]; ++e) {
      sum += static_cast<double>(entries[e].value) * v[entries[e].col - 1];
    }
    y[i] = sum;
  }
}

std::vector<double> matvec(const SparseUnitaryMatrix& m, std::span<const double> v) {
  std::vector<double> y(m.size());
  matvec(m, v, y);
  return y;
}

std::int64_t trace(const SparseUnitaryMatrix& m) {
  std::int64_t sum = 0;
  for (std::uint64_t i = 1; i <= m.size(); ++i) sum += m.at(i, i);
  return sum;
}

std::int64_t trace_of_square(const SparseUnitaryMatrix& m) {
  std::int64_t sum = 0;
  for (std::uint64_t i = 1; i <= m.size(); ++i) {
    for (const auto& e : m.row(i)) sum += e.value * m.at(e.col, i);
  }
  return sum;
}

std::string render_dense(const DenseIntMatrix& m) {
  std::ostringstream out;
  for (std::uint64_t i = 1; i <= m.size(); ++i) {
    for (std::uint64_t j = 1; j <= m.size(); ++j) {
      if (j > 1) out << ' ';
      out << m(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

std::string render_dense(const SparseUnitaryMatrix& m, std::uint64_t dense_max) {
  check_dense_guard(m.size(), dense_max, "render_dense");
  std::ostringstream out;
  for (std::uint64_t i = 1; i <= m.size(); ++i) {
    const auto r = m.row(i);
    auto it = r.begin();
    for (std::uint64_t j = 1; j <= m.size(); ++j) {
      if (j > 1) out << ' ';
      if (it != r.end() && it->col == j) {
        out << it->value;
        ++it;
      } else {
        out << '0';
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const SparseUnitaryMatrix& m) {
  std::ostringstream out;
  out << "i,j,v\n";
  for (std::uint64_t i = 1; i <= m.size(); ++i) {
    for (const auto& e : m.row(i)) out << i << ',' << e.col << ',' << e.value << '\n';
  }
  return out.str();
}

}  // namespace ured

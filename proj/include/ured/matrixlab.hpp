#pragma once

// Exact construction of the unitary Redheffer matrix R*_n and its factors S_n
// (unitary divisibility) and T_n (unitary Mertens column), plus the exact
// dense oracles used to check them: products, Bareiss determinants and the
// evaluate-and-interpolate characteristic polynomial.
//
// Indices in the public API are 1-based, matching the mathematical notation.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ured/arith.hpp"
#include "ured/config.hpp"

namespace ured {

enum class MatrixKind { RStar, S, T };

const char* to_string(MatrixKind kind);

struct MatrixEntry {
  std::uint32_t col;  // 1-based
  std::int64_t value;
  bool operator==(const MatrixEntry&) const = default;
};

// Row-compressed integer matrix, columns ascending within each row. Immutable
// after construction.
class SparseUnitaryMatrix {
 public:
  SparseUnitaryMatrix(std::uint64_t n, MatrixKind kind, std::vector<std::uint64_t> row_start,
                      std::vector<MatrixEntry> entries);

  std::uint64_t size() const noexcept { return n_; }
  MatrixKind kind() const noexcept { return kind_; }
  std::uint64_t entry_count() const noexcept { return entries_.size(); }

  // Stored entries of row i (1-based).
  std::span<const MatrixEntry> row(std::uint64_t i) const;
  // Value at (i, j); 0 when no entry is stored.
  std::int64_t at(std::uint64_t i, std::uint64_t j) const;

  std::span<const std::uint64_t> row_start() const noexcept { return row_start_; }
  std::span<const MatrixEntry> entries() const noexcept { return entries_; }

 private:
  std::uint64_t n_;
  MatrixKind kind_;
  std::vector<std::uint64_t> row_start_;  // n + 1 offsets
  std::vector<MatrixEntry> entries_;
};

// Square matrix of exact integers, stored row-major.
class DenseIntMatrix {
 public:
  // Zero matrix. Throws ResourceError above the dense guard.
  explicit DenseIntMatrix(std::uint64_t n, std::uint64_t dense_max = Limits{}.dense_max);

  static DenseIntMatrix identity(std::uint64_t n, std::uint64_t dense_max = Limits{}.dense_max);
  static DenseIntMatrix from_sparse(const SparseUnitaryMatrix& m,
                                    std::uint64_t dense_max = Limits{}.dense_max);

  std::uint64_t size() const noexcept { return n_; }
  // 1-based access.
  mpz_class& operator()(std::uint64_t i, std::uint64_t j) { return data_[(i - 1) * n_ + j - 1]; }
  const mpz_class& operator()(std::uint64_t i, std::uint64_t j) const {
    return data_[(i - 1) * n_ + j - 1];
  }

  bool operator==(const DenseIntMatrix&) const = default;

 private:
  std::uint64_t n_;
  std::vector<mpz_class> data_;
};

SparseUnitaryMatrix build_rstar(std::uint64_t n);
SparseUnitaryMatrix build_s(std::uint64_t n);
// Column 1 holds M*(floor(n/i), i); requires n <= t.limit().
SparseUnitaryMatrix build_t(const OmegaTable& t, std::uint64_t n);

// Exact product. Throws ContractViolation on dimension mismatch and
// ResourceError above the dense guard.
DenseIntMatrix sparse_multiply(const SparseUnitaryMatrix& a, const SparseUnitaryMatrix& b,
                               std::uint64_t dense_max = Limits{}.dense_max);

// Fraction-free Gaussian elimination with row pivoting. Takes its argument
// by value and eliminates in place.
mpz_class bareiss_det(DenseIntMatrix m);

// Coefficients of det(x I - R*_n), index = power of x. Evaluates the
// determinant with Bareiss at x = 0..n and interpolates exactly. The node
// evaluations run on OpenMP threads.
std::vector<mpz_class> charpoly_oracle(std::uint64_t n, std::uint64_t oracle_max = Limits{}.oracle_max);

// y = m v. One OpenMP thread per row block; each row sums in column order, so
// the result is bit-identical to matvec_serial.
void matvec(const SparseUnitaryMatrix& m, std::span<const double> v, std::span<double> y);
std::vector<double> matvec(const SparseUnitaryMatrix& m, std::span<const double> v);
void matvec_serial(const SparseUnitaryMatrix& m, std::span<const double> v, std::span<double> y);

// Exact trace(m) and trace(m^2) from the sparse structure.
std::int64_t trace(const SparseUnitaryMatrix& m);
std::int64_t trace_of_square(const SparseUnitaryMatrix& m);

// Space-separated integer grid, one row per line, trailing newline.
std::string render_dense(const SparseUnitaryMatrix& m, std::uint64_t dense_max = Limits{}.dense_max);
std::string render_dense(const DenseIntMatrix& m);
// "i,j,v" header then one 1-based triple per stored entry, row-major.
std::string render_csv(const SparseUnitaryMatrix& m);

}  // namespace ured

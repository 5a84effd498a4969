#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace glinf {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" and canonicalizes. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Raised when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One stored entry of a sparse row.
struct Entry {
  std::size_t col;
  Rational value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

using SparseRow = std::vector<Entry>;

/// Row-compressed exact sparse matrix.
///
/// Every row is sorted by column and never stores a zero, so two matrices are
/// equal iff their row arrays are equal and `is_zero` is a structural check.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix scalar(std::size_t n, const Rational& s);
  /// Builds from (row, col, value) triplets; duplicates are summed.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& t);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  Rational at(std::size_t r, std::size_t c) const;
  /// Assigns one entry; assigning zero erases it.
  void set(std::size_t r, std::size_t c, const Rational& v);
  /// Adds `v` to one entry, erasing it if the sum cancels.
  void add_to(std::size_t r, std::size_t c, const Rational& v);
  /// Replaces a whole row. The row must be sorted and zero-free.
  void set_row(std::size_t r, SparseRow row);

  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept;

  /// If this matrix is s·Identity, returns s.
  std::optional<Rational> scalar_value() const;

  /// Column `c` as a sparse vector (row index, value).
  SparseRow column(std::size_t c) const;

  SparseMatrix transpose() const;

  SparseMatrix& operator+=(const SparseMatrix& b);
  SparseMatrix& operator-=(const SparseMatrix& b);
  SparseMatrix& operator*=(const Rational& s);

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }
  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);
inline bool is_zero(const SparseMatrix& a) { return a.is_zero(); }

/// ab - ba.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// a - s·Identity.
SparseMatrix shift(const SparseMatrix& a, const Rational& s);

/// Rank over the rationals by sparse row echelon reduction.
std::size_t rank(const SparseMatrix& a);

/// Nullity of a - s·Identity.
std::size_t kernel_dim(const SparseMatrix& a, const Rational& s);

}  // namespace glinf

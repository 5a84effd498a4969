#include "glinf/exactnum.hpp"

#include <algorithm>

namespace glinf {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto integer_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!integer_ok(s, true)) throw bad();
  } else {
    if (!integer_ok(std::string_view(s).substr(0, slash), true) ||
        !integer_ok(std::string_view(s).substr(slash + 1), false))
      throw bad();
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

// x + factor*y for sorted zero-free rows.
SparseRow merge_rows(const SparseRow& x, const SparseRow& y, const Rational& factor) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->col < j->col)) {
      out.push_back(*i++);
    } else if (i == x.end() || j->col < i->col) {
      out.push_back({j->col, factor * j->value});
      ++j;
    } else {
      Rational v = i->value + factor * j->value;
      if (sgn(v) != 0) out.push_back({i->col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

SparseMatrix SparseMatrix::scalar(std::size_t n, const Rational& s) {
  SparseMatrix m(n, n);
  if (sgn(s) == 0) return m;
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, s});
  return m;
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& t) {
  SparseMatrix m(rows, cols);
  for (const auto& [r, c, v] : t) m.add_to(r, c, v);
  return m;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
  const bool present = it != row.end() && it->col == c;
  if (sgn(v) == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    row.insert(it, Entry{c, v});
  }
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const Rational& v) {
  if (sgn(v) == 0) return;
  set(r, c, at(r, c) + v);
}

void SparseMatrix::set_row(std::size_t r, SparseRow row) {
  if (r >= rows_) throw DimensionError("row index out of range");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_ || sgn(row[i].value) == 0 || (i > 0 && row[i - 1].col >= row[i].col))
      throw std::invalid_argument("set_row: row must be sorted, in range and zero-free");
  }
  data_[r] = std::move(row);
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool SparseMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

std::optional<Rational> SparseMatrix::scalar_value() const {
  if (!square()) return std::nullopt;
  if (rows_ == 0) return Rational(0);
  if (is_zero()) return Rational(0);
  const auto& first = data_[0];
  if (first.size() != 1 || first[0].col != 0) return std::nullopt;
  const Rational& s = first[0].value;
  for (std::size_t i = 1; i < rows_; ++i) {
    const auto& row = data_[i];
    if (row.size() != 1 || row[0].col != i || row[0].value != s) return std::nullopt;
  }
  return s;
}

SparseRow SparseMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  SparseRow out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational v = at(r, c);
    if (sgn(v) != 0) out.push_back({r, std::move(v)});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  return t;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    if (!b.data_[r].empty()) data_[r] = merge_rows(data_[r], b.data_[r], Rational(1));
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    if (!b.data_[r].empty()) data_[r] = merge_rows(data_[r], b.data_[r], Rational(-1));
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_)
    for (auto& e : row) e.value *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  SparseMatrix c(a.rows_, b.cols_);
  std::vector<Rational> acc(b.cols_);
  std::vector<char> used(b.cols_, 0);
  std::vector<std::size_t> touched;
  Rational term;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (const auto& [k, aik] : a.data_[i]) {
      for (const auto& [j, bkj] : b.data_[k]) {
        mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = term;
        } else {
          acc[j] += term;
        }
      }
    }
    if (touched.empty()) continue;
    std::sort(touched.begin(), touched.end());
    auto& out = c.data_[i];
    for (std::size_t j : touched) {
      used[j] = 0;
      if (sgn(acc[j]) != 0) out.push_back({j, acc[j]});
    }
  }
  return c;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) { return a * b; }

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix shift(const SparseMatrix& a, const Rational& s) {
  if (!a.square()) throw DimensionError("shift: matrix is not square");
  return a - SparseMatrix::scalar(a.rows(), s);
}

std::size_t rank(const SparseMatrix& a) {
  // pivot[c] holds a reduced row whose leading entry is 1 at column c.
  std::vector<SparseRow> pivot(a.cols());
  std::vector<char> has_pivot(a.cols(), 0);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow row = a.row(i);
    while (!row.empty()) {
      const std::size_t lead = row.front().col;
      if (has_pivot[lead]) {
        Rational factor = -row.front().value;
        row = merge_rows(row, pivot[lead], factor);
        continue;
      }
      Rational inv = 1 / row.front().value;
      for (auto& e : row) e.value *= inv;
      pivot[lead] = std::move(row);
      has_pivot[lead] = 1;
      ++r;
      break;
    }
  }
  return r;
}

std::size_t kernel_dim(const SparseMatrix& a, const Rational& s) {
  return a.cols() - rank(shift(a, s));
}

}  // namespace glinf

#include "glinf/gt_oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace glinf {

GTPattern::GTPattern(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
  for (std::size_t p = 1; p <= rows_.size(); ++p) {
    if (rows_[p - 1].size() != p) throw std::invalid_argument("GT pattern row " + std::to_string(p) + " has wrong length");
    if (p == 1) continue;
    const auto& upper = rows_[p - 1];
    const auto& lower = rows_[p - 2];
    for (std::size_t i = 0; i + 1 < p; ++i) {
      if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1]))
        throw std::invalid_argument("GT pattern violates betweenness at row " + std::to_string(p - 1));
    }
  }
}

std::vector<long> GTPattern::flattened() const {
  std::vector<long> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda, std::size_t n) {
  auto top = lambda.truncated(n);
  std::vector<std::vector<long>> rows(n);
  if (n > 0) rows[n - 1] = std::move(top);

  std::vector<GTPattern> out;
  // Fill row p given row p+1, descending so output is already in order.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t p, std::size_t i) {
    if (p == 0) {
      out.emplace_back(rows);
      return;
    }
    if (i == p) {
      fill(p - 1, 0);
      return;
    }
    const auto& upper = rows[p];  // row p+1, length p+1
    for (long v = upper[i]; v >= upper[i + 1]; --v) {
      rows[p - 1][i] = v;
      fill(p, i + 1);
    }
  };
  for (std::size_t p = 1; p < n; ++p) rows[p - 1].assign(p, 0);
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  fill(n - 1, 0);
  return out;
}

Weight pattern_weight(const GTPattern& p) {
  std::vector<long> w(p.rank());
  long below = 0;
  for (std::size_t r = 1; r <= p.rank(); ++r) {
    const auto& row = p.row(r);
    const long s = std::accumulate(row.begin(), row.end(), 0L);
    w[r - 1] = s - below;
    below = s;
  }
  return Weight(std::move(w));
}

std::size_t weyl_dimension(const HighestWeight& lambda, std::size_t n) {
  const auto l = lambda.truncated(n);
  Rational d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d *= Rational(l[i] - l[j] + static_cast<long>(j - i), static_cast<long>(j - i));
      d.canonicalize();
    }
  return d.get_num().get_ui();
}

std::optional<std::size_t> ModuleRep::index_of(const GTPattern& p) const {
  auto it = index_.find(p.flattened());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const SparseMatrix& ModuleRep::generator(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::out_of_range("generator index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                            std::to_string(n_));
  return gens_[(i - 1) * n_ + (j - 1)];
}

ModuleRep ModuleRep::with_perturbed_entry(std::size_t i, std::size_t j, std::size_t row, std::size_t col,
                                          const Rational& delta) const {
  ModuleRep copy = *this;
  generator(i, j);  // range check
  copy.gens_[(i - 1) * n_ + (j - 1)].add_to(row, col, delta);
  return copy;
}

namespace {

// l_{p,i} = entry(p, i) - i + 1
Rational shifted(const GTPattern& g, std::size_t p, std::size_t i) {
  return Rational(g.entry(p, i) - static_cast<long>(i) + 1);
}

GTPattern bumped(const GTPattern& g, std::size_t p, std::size_t i, long delta) {
  std::vector<std::vector<long>> rows;
  rows.reserve(g.rank());
  for (std::size_t r = 1; r <= g.rank(); ++r) rows.push_back(g.row(r));
  rows[p - 1][i - 1] += delta;
  return GTPattern(std::move(rows));
}

bool bump_is_pattern(const GTPattern& g, std::size_t p, std::size_t i, long delta) {
  const long v = g.entry(p, i) + delta;
  // against row p+1: entry(p+1, i) >= v >= entry(p+1, i+1)
  if (v > g.entry(p + 1, i) || v < g.entry(p + 1, i + 1)) return false;
  // against row p-1: entry(p, i) >= entry(p-1, i) (if i <= p-1), entry(p-1, i-1) >= entry(p, i) (if i >= 2)
  if (p >= 2) {
    if (i <= p - 1 && v < g.entry(p - 1, i)) return false;
    if (i >= 2 && v > g.entry(p - 1, i - 1)) return false;
  }
  return true;
}

Rational factorial(long x) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
  return Rational(f);
}

// Rescaling of the basis vector that makes the vector module act by elementary
// matrices: prod over k and i <= j < k of (l_{k,i} - l_{k-1,j})! / (l_{k-1,i} - l_{k-1,j})!.
Rational basis_scale(const GTPattern& g) {
  Rational s = 1;
  for (std::size_t k = 2; k <= g.rank(); ++k)
    for (std::size_t i = 1; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const long top = g.entry(k, i) - static_cast<long>(i) - g.entry(k - 1, j) + static_cast<long>(j);
        const long below = g.entry(k - 1, i) - static_cast<long>(i) - g.entry(k - 1, j) + static_cast<long>(j);
        s *= factorial(top) / factorial(below);
      }
  return s;
}

}  // namespace

ModuleRep build_module(const HighestWeight& lambda, std::size_t n, Validation validation) {
  ModuleRep rep;
  rep.n_ = n;
  rep.lambda_ = lambda;
  rep.basis_ = enumerate_patterns(lambda, n);
  const std::size_t d = rep.basis_.size();
  rep.weights_.reserve(d);
  for (std::size_t idx = 0; idx < d; ++idx) {
    rep.weights_.push_back(pattern_weight(rep.basis_[idx]));
    rep.index_.emplace(rep.basis_[idx].flattened(), idx);
  }
  rep.hwv_ = 0;
  std::vector<Rational> scale;
  scale.reserve(d);
  for (const auto& g : rep.basis_) scale.push_back(basis_scale(g));
  rep.gens_.assign(n * n, SparseMatrix(d, d));
  auto gen = [&](std::size_t i, std::size_t j) -> SparseMatrix& { return rep.gens_[(i - 1) * n + (j - 1)]; };

  for (std::size_t p = 1; p <= n; ++p) {
    auto& h = gen(p, p);
    for (std::size_t idx = 0; idx < d; ++idx) h.set(idx, idx, Rational(rep.weights_[idx][p]));
  }

  for (std::size_t p = 1; p < n; ++p) {
    auto& raise = gen(p, p + 1);
    auto& lower = gen(p + 1, p);
    for (std::size_t src = 0; src < d; ++src) {
      const GTPattern& g = rep.basis_[src];
      for (std::size_t i = 1; i <= p; ++i) {
        Rational lpi = shifted(g, p, i);
        Rational denom = 1;
        for (std::size_t j = 1; j <= p; ++j)
          if (j != i) denom *= lpi - shifted(g, p, j);

        if (bump_is_pattern(g, p, i, +1)) {
          Rational num = 1;
          for (std::size_t j = 1; j <= p + 1; ++j) num *= lpi - shifted(g, p + 1, j);
          const std::size_t dst = *rep.index_of(bumped(g, p, i, +1));
          raise.add_to(dst, src, -num / denom * scale[dst] / scale[src]);
        }
        if (bump_is_pattern(g, p, i, -1)) {
          Rational num = 1;
          for (std::size_t j = 1; j + 1 <= p; ++j) num *= lpi - shifted(g, p - 1, j);
          const std::size_t dst = *rep.index_of(bumped(g, p, i, -1));
          lower.add_to(dst, src, num / denom * scale[dst] / scale[src]);
        }
      }
    }
  }

  // e_ij = [e_{i,j-1}, e_{j-1,j}] for i < j-1; e_ji = [e_{j,j-1}, e_{j-1,i}].
  for (std::size_t gap = 2; gap < n; ++gap) {
    for (std::size_t i = 1; i + gap <= n; ++i) {
      const std::size_t j = i + gap;
      gen(i, j) = commutator(gen(i, j - 1), gen(j - 1, j));
      gen(j, i) = commutator(gen(j, j - 1), gen(j - 1, i));
    }
  }

  const bool validate =
      validation == Validation::Always || (validation == Validation::Auto && d <= kAutoValidateMaxDim);
  if (validate) {
    if (weyl_dimension(lambda, n) != d)
      throw RepresentationError("pattern count " + std::to_string(d) + " differs from Weyl dimension for " +
                                to_string(lambda));
    if (auto check = verify_commutation(rep); !check)
      throw RepresentationError("V_" + std::to_string(n) + to_string(lambda) + ": " + check.counterexample);
    if (!verify_highest_weight_vector(rep))
      throw RepresentationError("V_" + std::to_string(n) + to_string(lambda) + ": highest weight vector check failed");
  }
  return rep;
}

const SparseMatrix& generator_matrix(const ModuleRep& rep, std::size_t i, std::size_t j) {
  return rep.generator(i, j);
}

CommutationCheck verify_commutation(const ModuleRep& rep) {
  const std::size_t n = rep.n();
  const std::size_t d = rep.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l) {
          SparseMatrix expected(d, d);
          if (j == k) expected += rep.generator(i, l);
          if (l == i) expected -= rep.generator(k, j);
          if (commutator(rep.generator(i, j), rep.generator(k, l)) != expected) {
            return {false, "[e_" + std::to_string(i) + std::to_string(j) + ", e_" + std::to_string(k) +
                               std::to_string(l) + "] != delta_jk e_il - delta_li e_kj"};
          }
        }
  return {};
}

bool verify_highest_weight_vector(const ModuleRep& rep) {
  const std::size_t v = rep.hwv_index();
  for (std::size_t i = 1; i <= rep.n(); ++i) {
    for (std::size_t j = i + 1; j <= rep.n(); ++j)
      if (!rep.generator(i, j).column(v).empty()) return false;
    const auto col = rep.generator(i, i).column(v);
    const long expected = rep.lambda()[i];
    if (expected == 0 ? !col.empty() : (col.size() != 1 || col[0].col != v || col[0].value != expected))
      return false;
  }
  return true;
}

}  // namespace glinf

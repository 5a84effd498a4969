#include "glinf/charmat.hpp"

#include "glinf/casimir.hpp"
#include "glinf/tensor.hpp"

#include <random>

namespace glinf {

BlockOperator::BlockOperator(std::size_t outer, std::size_t inner)
    : outer_(outer), inner_(inner), blocks_(outer * outer, SparseMatrix(inner, inner)) {}

BlockOperator BlockOperator::identity(std::size_t outer, std::size_t inner) {
  BlockOperator op(outer, inner);
  for (std::size_t i = 1; i <= outer; ++i) op.block(i, i) = SparseMatrix::identity(inner);
  return op;
}

BlockOperator BlockOperator::from_matrix(std::size_t outer, std::size_t inner, const SparseMatrix& m) {
  if (m.rows() != outer * inner || m.cols() != outer * inner)
    throw DimensionError("from_matrix: matrix is not (outer*inner) square");
  BlockOperator op(outer, inner);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) op.block(r / inner + 1, e.col / inner + 1).set(r % inner, e.col % inner, e.value);
  return op;
}

const SparseMatrix& BlockOperator::block(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > outer_ || j > outer_) throw std::out_of_range("block index out of range");
  return blocks_[(i - 1) * outer_ + (j - 1)];
}

SparseMatrix& BlockOperator::block(std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > outer_ || j > outer_) throw std::out_of_range("block index out of range");
  return blocks_[(i - 1) * outer_ + (j - 1)];
}

SparseMatrix BlockOperator::diagonal_sum() const {
  SparseMatrix s(inner_, inner_);
  for (std::size_t i = 1; i <= outer_; ++i) s += block(i, i);
  return s;
}

SparseMatrix BlockOperator::flatten() const {
  SparseMatrix m(outer_ * inner_, outer_ * inner_);
  for (std::size_t i = 1; i <= outer_; ++i) {
    for (std::size_t r = 0; r < inner_; ++r) {
      SparseRow row;
      for (std::size_t j = 1; j <= outer_; ++j)
        for (const auto& e : block(i, j).row(r)) row.push_back({(j - 1) * inner_ + e.col, e.value});
      m.set_row((i - 1) * inner_ + r, std::move(row));
    }
  }
  return m;
}

bool BlockOperator::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  if (a.outer_ != b.outer_ || a.inner_ != b.inner_) throw DimensionError("block operator shapes differ");
  BlockOperator c(a.outer_, a.inner_);
  for (std::size_t i = 1; i <= a.outer_; ++i)
    for (std::size_t k = 1; k <= a.outer_; ++k) {
      const auto& aik = a.block(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 1; j <= a.outer_; ++j) {
        const auto& bkj = b.block(k, j);
        if (!bkj.is_zero()) c.block(i, j) += aik * bkj;
      }
    }
  return c;
}

BlockOperator char_matrix(const ModuleRep& rep) {
  BlockOperator a(rep.n(), rep.dim());
  for (std::size_t i = 1; i <= rep.n(); ++i)
    for (std::size_t j = 1; j <= rep.n(); ++j) a.block(i, j) = rep.generator(j, i);
  return a;
}

BlockOperator split_casimir(const ModuleRep& left, const ModuleRep& right) {
  if (left.n() != right.n()) throw DimensionError("split_casimir: modules have different rank");
  const std::size_t n = left.n();
  BlockOperator a(left.dim(), right.dim());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const auto& l = left.generator(i, j);
      const auto& r = right.generator(j, i);
      if (l.is_zero() || r.is_zero()) continue;
      for (std::size_t row = 0; row < l.rows(); ++row)
        for (const auto& e : l.row(row)) a.block(row + 1, e.col + 1) += e.value * r;
    }
  return a;
}

BlockOperator op_power(const BlockOperator& a, unsigned m) {
  BlockOperator p = BlockOperator::identity(a.outer_dim(), a.inner_dim());
  for (unsigned t = 0; t < m; ++t) p = a * p;
  return p;
}

namespace {

Rational require_scalar(const SparseMatrix& m, const ModuleRep& rep, unsigned order) {
  auto s = m.scalar_value();
  if (!s)
    throw RepresentationError("invariant of order " + std::to_string(order) + " is not scalar on V_" +
                              std::to_string(rep.n()) + to_string(rep.lambda()));
  return *s;
}

}  // namespace

std::vector<Rational> invariant_scalars(const ModuleRep& rep, unsigned m_max) {
  std::vector<Rational> chi;
  if (m_max == 0) return chi;
  const BlockOperator a = char_matrix(rep);
  const Rational n = static_cast<long>(rep.n());
  chi.push_back(require_scalar(a.diagonal_sum(), rep, 1));
  BlockOperator power = a;
  for (unsigned t = 2; t <= m_max; ++t) {
    power = a * power;
    SparseMatrix op = shift(power.diagonal_sum(), n * chi.back());
    chi.push_back(require_scalar(op, rep, t));
  }
  return chi;
}

SparseMatrix invariant_operator(const ModuleRep& rep, unsigned m) {
  if (m < 1) throw OrderError("invariant order must be at least 1");
  const auto chi = invariant_scalars(rep, m);
  return SparseMatrix::scalar(rep.dim(), chi.back());
}

Rational trace_power_scalar(const ModuleRep& rep, unsigned m) {
  const SparseMatrix s = op_power(char_matrix(rep), m).diagonal_sum();
  return require_scalar(s, rep, m);
}

std::vector<Prop1Tuple> prop1_samples(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<Prop1Tuple> out;
  if (n == 0) return out;
  if (n <= 3) {
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) out.push_back({k, l, i, j});
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, n);
  for (std::size_t s = 0; s < count; ++s) out.push_back({pick(rng), pick(rng), pick(rng), pick(rng)});
  return out;
}

bool verify_prop1(const ModuleRep& rep, const BlockOperator& power, const std::vector<Prop1Tuple>& sample) {
  const std::size_t d = rep.dim();
  for (const auto& [k, l, i, j] : sample) {
    SparseMatrix expected(d, d);
    if (j == l) expected += power.block(i, k);
    if (i == k) expected -= power.block(l, j);
    if (commutator(rep.generator(k, l), power.block(i, j)) != expected) return false;
  }
  return true;
}

bool verify_prop1(const ModuleRep& rep, unsigned m, const std::vector<Prop1Tuple>& sample) {
  return verify_prop1(rep, op_power(char_matrix(rep), m), sample);
}

bool verify_prop2(const ModuleRep& rep_big, unsigned m) {
  if (m < 2) throw OrderError("verify_prop2 needs m >= 2");
  const std::size_t big_n = rep_big.n();
  const BlockOperator power = op_power(char_matrix(rep_big), m);
  const Rational chi = casimir_eigenvalue_closed(rep_big.lambda(), m - 1);
  for (std::size_t v = 0; v < rep_big.dim(); ++v) {
    const std::size_t r = rep_big.weight_of(v).support();
    for (std::size_t i = r + 1; i <= big_n; ++i) {
      const SparseRow col = power.block(i, i).column(v);
      const bool ok = sgn(chi) == 0 ? col.empty() : (col.size() == 1 && col[0].col == v && col[0].value == chi);
      if (!ok) return false;
    }
  }
  return true;
}

void require_annihilation(const IdentityCertificate& cert) {
  if (cert.residual_is_zero) return;
  std::string roots;
  for (const auto& r : cert.roots) roots += (roots.empty() ? "" : ", ") + to_string(r);
  std::string what = "characteristic identity fails for lambda=" + to_string(cert.lambda);
  if (cert.mu) what += ", mu=" + to_string(*cert.mu);
  throw IdentityViolation(what + " at n=" + std::to_string(cert.n_used) + " with roots {" + roots + "}");
}

SparseMatrix annihilation_residual(const SparseMatrix& op, const std::vector<Rational>& roots) {
  if (roots.empty()) return op;
  SparseMatrix acc = shift(op, roots.front());
  for (std::size_t i = 1; i < roots.size() && !acc.is_zero(); ++i) acc = acc * shift(op, roots[i]);
  return acc;
}

IdentityCertificate certify(const SparseMatrix& op, std::vector<Rational> roots) {
  IdentityCertificate cert;
  cert.space_dim = op.rows();
  cert.residual_is_zero = annihilation_residual(op, roots).is_zero();
  for (const auto& r : roots) cert.per_root_kernel_dims.push_back(kernel_dim(op, r));
  cert.roots = std::move(roots);
  return cert;
}

std::vector<bool> factor_needed(const SparseMatrix& op, const std::vector<Rational>& roots) {
  std::vector<bool> needed;
  for (std::size_t skip = 0; skip < roots.size(); ++skip) {
    std::vector<Rational> others;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (i != skip) others.push_back(roots[i]);
    if (others.empty()) {
      // Dropping the only factor leaves the empty product, the identity.
      needed.push_back(op.rows() > 0);
      continue;
    }
    needed.push_back(!annihilation_residual(op, others).is_zero());
  }
  return needed;
}

namespace {

std::size_t identity_rank(const HighestWeight& lambda, std::optional<std::size_t> n) {
  const std::size_t rank = n.value_or(lambda.k() + 1);
  if (rank < lambda.k() + 1)
    throw TruncationError("the characteristic identity needs n >= k+1 = " + std::to_string(lambda.k() + 1));
  return rank;
}

IdentityCertificate char_certificate(const HighestWeight& lambda, std::size_t n, std::vector<Rational> roots) {
  const ModuleRep rep = build_module(lambda, n);
  IdentityCertificate cert = certify(char_matrix(rep).flatten(), std::move(roots));
  cert.lambda = lambda;
  cert.n_used = n;
  return cert;
}

IdentityCertificate split_certificate(const HighestWeight& lambda, const HighestWeight& mu, std::size_t n,
                                  std::vector<Rational> roots) {
  const ModuleRep left = build_module(lambda, n);
  const ModuleRep right = build_module(mu, n);
  IdentityCertificate cert = certify(split_casimir(left, right).flatten(), std::move(roots));
  cert.lambda = lambda;
  cert.mu = mu;
  cert.n_used = n;
  return cert;
}

}  // namespace

IdentityCertificate verify_theorem5(const HighestWeight& lambda, std::optional<std::size_t> n) {
  const std::size_t rank = identity_rank(lambda, n);
  return char_certificate(lambda, rank, alpha_roots(lambda, lambda.k() + 1));
}

std::vector<Rational> reduced_theorem5_roots(const HighestWeight& lambda) {
  std::vector<Rational> roots;
  const auto all = alpha_roots(lambda, lambda.k() + 1);
  for (std::size_t i = 1; i <= lambda.k() + 1; ++i) {
    std::vector<long> parts = lambda.truncated(lambda.k() + 1);
    parts[i - 1] += 1;
    if (is_dominant(Weight(parts))) roots.push_back(all[i - 1]);
  }
  return roots;
}

IdentityCertificate verify_reduced_theorem5(const HighestWeight& lambda, std::optional<std::size_t> n) {
  const std::size_t rank = identity_rank(lambda, n);
  return char_certificate(lambda, rank, reduced_theorem5_roots(lambda));
}

std::vector<Rational> theorem6_roots(const HighestWeight& lambda, const HighestWeight& mu, std::size_t n) {
  std::vector<Rational> roots;
  const Rational base = c2_form(lambda);
  const Weight m = mu.as_weight();
  for (const auto& w : distinct_weights(lambda, n)) roots.push_back((c2_form(w) + 2 * inner_product(w, m) - base) / 2);
  return roots;
}

IdentityCertificate verify_theorem6(const HighestWeight& lambda, const HighestWeight& mu,
                                    std::optional<std::size_t> n) {
  const std::size_t rank = n.value_or(lambda.k() + mu.k());
  return split_certificate(lambda, mu, rank, theorem6_roots(lambda, mu, rank));
}

std::vector<Rational> reduced_identity_roots(const HighestWeight& lambda, const HighestWeight& mu) {
  std::vector<Rational> roots;
  const Rational shift_by = c2_form(lambda) + c2_form(mu);
  for (const auto& s : lr_decompose(lambda, mu).summands) roots.push_back((c2_form(s.nu) - shift_by) / 2);
  return roots;
}

IdentityCertificate verify_reduced_theorem6(const HighestWeight& lambda, const HighestWeight& mu,
                                            std::optional<std::size_t> n) {
  const std::size_t rank = n.value_or(lambda.k() + mu.k());
  return split_certificate(lambda, mu, rank, reduced_identity_roots(lambda, mu));
}

}  // namespace glinf

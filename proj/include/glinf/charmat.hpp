#pragma once

#include "glinf/exactnum.hpp"
#include "glinf/gt_oracle.hpp"
#include "glinf/weights.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace glinf {

/// An outer x outer grid of inner x inner exact matrices, i.e. an operator on
/// C^outer (x) C^inner. block(i, j) is 1-based and is the matrix coefficient
/// sending (basis j) (x) v to (basis i) (x) block(i, j) v.
class BlockOperator {
public:
  BlockOperator() = default;
  BlockOperator(std::size_t outer, std::size_t inner);

  static BlockOperator identity(std::size_t outer, std::size_t inner);
  /// Inverse of flatten(): row (i-1)*inner + r of `m` is row r of block row i.
  static BlockOperator from_matrix(std::size_t outer, std::size_t inner, const SparseMatrix& m);

  std::size_t outer_dim() const noexcept { return outer_; }
  std::size_t inner_dim() const noexcept { return inner_; }

  const SparseMatrix& block(std::size_t i, std::size_t j) const;
  SparseMatrix& block(std::size_t i, std::size_t j);

  /// sum_i block(i, i).
  SparseMatrix diagonal_sum() const;
  SparseMatrix flatten() const;
  bool is_zero() const;

  /// Block product: (ab)(i, j) = sum_k a(i, k) b(k, j), operator order kept.
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend bool operator==(const BlockOperator&, const BlockOperator&) = default;

private:
  std::size_t outer_ = 0;
  std::size_t inner_ = 0;
  std::vector<SparseMatrix> blocks_;
};

inline BlockOperator compose(const BlockOperator& a, const BlockOperator& b) { return a * b; }

/// The characteristic matrix A on C^n (x) V_n(lambda): block(i, j) = pi(e_ji),
/// so A sends b (x) v to sum_i i (x) e_bi v.
BlockOperator char_matrix(const ModuleRep& rep);

/// A_Lambda = sum_ij pi_Lambda(e_ij) (x) pi_mu(e_ji) on V_n(Lambda) (x) V_n(mu).
/// Block (a, b) is sum_ij pi_Lambda(e_ij)[a][b] pi_mu(e_ji). Both modules must
/// have the same rank.
BlockOperator split_casimir(const ModuleRep& left, const ModuleRep& right);

/// a^m by repeated composition; a^0 is the identity.
BlockOperator op_power(const BlockOperator& a, unsigned m);

/// Scalars chi(I_1), ..., chi(I_m_max) read off V_n(lambda): I_1 is
/// sum_i pi(e_ii) and I_t = sum_{i<=n} (A^t)_ii - n chi(I_{t-1}). Throws
/// RepresentationError if any of these operators is not a multiple of the
/// identity.
std::vector<Rational> invariant_scalars(const ModuleRep& rep, unsigned m_max);

/// The d x d matrix of I_m on V_n(lambda) (see invariant_scalars).
SparseMatrix invariant_operator(const ModuleRep& rep, unsigned m);

/// Scalar of the gl(n) invariant sum_{i<=n} (A^m)_ii on V_n(lambda).
Rational trace_power_scalar(const ModuleRep& rep, unsigned m);

/// Index tuple (k, l, i, j) for the commutator check [e_kl, (A^m)_i^j].
using Prop1Tuple = std::array<std::size_t, 4>;

/// All n^4 tuples when n <= 3, otherwise `count` tuples drawn with `seed`.
std::vector<Prop1Tuple> prop1_samples(std::size_t n, std::uint64_t seed, std::size_t count = 64);

/// [pi(e_kl), (A^m)_i^j] == delta_jl (A^m)_i^k - delta_ik (A^m)_l^j for every
/// sampled tuple.
bool verify_prop1(const ModuleRep& rep, unsigned m, const std::vector<Prop1Tuple>& sample);
/// Same, with the m-th power supplied (avoids recomputing it).
bool verify_prop1(const ModuleRep& rep, const BlockOperator& power, const std::vector<Prop1Tuple>& sample);

/// For every basis vector v of weight support r < N and every r < i <= N:
/// (A^m)_ii v == chi(I_{m-1}) v. Requires m >= 2.
bool verify_prop2(const ModuleRep& rep_big, unsigned m);

/// Outcome of checking prod_i (op - root_i) == 0.
struct IdentityCertificate {
  HighestWeight lambda;
  std::optional<HighestWeight> mu;
  std::size_t n_used = 0;
  std::vector<Rational> roots;
  bool residual_is_zero = false;
  /// dim ker(op - root_i) per root.
  std::vector<std::size_t> per_root_kernel_dims;
  /// Dimension of the space the operator acts on.
  std::size_t space_dim = 0;
};

/// The certificate reports a nonzero residual.
class IdentityViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws IdentityViolation unless cert.residual_is_zero.
void require_annihilation(const IdentityCertificate& cert);

/// prod_i (op - roots[i]) multiplied left to right. With no roots this is op.
SparseMatrix annihilation_residual(const SparseMatrix& op, const std::vector<Rational>& roots);

/// Fills roots, residual flag and kernel dimensions for `op`.
IdentityCertificate certify(const SparseMatrix& op, std::vector<Rational> roots);

/// For each root: true when the product over the other roots is nonzero, i.e.
/// the factor is needed.
std::vector<bool> factor_needed(const SparseMatrix& op, const std::vector<Rational>& roots);

/// prod_{i=1}^{k+1} (A - alpha_i) on C^n (x) V_n(lambda), n defaulting to k+1.
/// For lambda = 0 this is the statement A = 0.
IdentityCertificate verify_theorem5(const HighestWeight& lambda, std::optional<std::size_t> n = std::nullopt);

/// Roots alpha_i for the i with lambda + eps_i dominant.
std::vector<Rational> reduced_theorem5_roots(const HighestWeight& lambda);

/// The reduced identity prod (A - alpha_i) over the roots above.
IdentityCertificate verify_reduced_theorem5(const HighestWeight& lambda,
                                            std::optional<std::size_t> n = std::nullopt);

/// Roots 1/2[(w, w + 2(mu + rho)) - (lambda, lambda + 2 rho)] over the
/// distinct weights w of V_n(lambda).
std::vector<Rational> theorem6_roots(const HighestWeight& lambda, const HighestWeight& mu, std::size_t n);

/// prod over the roots above of (A_lambda - root) on V_n(lambda) (x) V_n(mu),
/// n defaulting to lambda.k() + mu.k().
IdentityCertificate verify_theorem6(const HighestWeight& lambda, const HighestWeight& mu,
                                    std::optional<std::size_t> n = std::nullopt);

/// alpha_nu = 1/2[(nu, nu+2rho) - (lambda, lambda+2rho) - (mu, mu+2rho)] for
/// each distinct nu in lr_decompose(lambda, mu), in summand order.
std::vector<Rational> reduced_identity_roots(const HighestWeight& lambda, const HighestWeight& mu);

/// prod over reduced_identity_roots of (A_lambda - root).
IdentityCertificate verify_reduced_theorem6(const HighestWeight& lambda, const HighestWeight& mu,
                                            std::optional<std::size_t> n = std::nullopt);

}  // namespace glinf

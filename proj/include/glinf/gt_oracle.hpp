#pragma once

#include "glinf/exactnum.hpp"
#include "glinf/weights.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glinf {

/// The explicit module disagrees with the gl(n) relations.
class RepresentationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Gelfand-Tsetlin pattern of rank n: row p (1 <= p <= n) has p entries and
/// entry(p, i) >= entry(p-1, i) >= entry(p, i+1).
class GTPattern {
public:
  GTPattern() = default;
  /// rows[p-1] is row p. Throws std::invalid_argument if the shape or the
  /// betweenness conditions fail.
  explicit GTPattern(std::vector<std::vector<long>> rows);

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<long>& row(std::size_t p) const { return rows_.at(p - 1); }
  long entry(std::size_t p, std::size_t i) const { return rows_.at(p - 1).at(i - 1); }
  const std::vector<long>& top() const { return rows_.back(); }
  /// Top row first, then row n-1, ..., row 1.
  std::vector<long> flattened() const;

  friend bool operator==(const GTPattern&, const GTPattern&) = default;

private:
  std::vector<std::vector<long>> rows_;
};

/// All patterns with top row lambda_n, in descending lexicographic order of
/// flattened(); the highest weight vector comes first.
std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda, std::size_t n);

/// Component p is (sum of row p) - (sum of row p-1).
Weight pattern_weight(const GTPattern& p);

/// Weyl dimension of the gl(n) irreducible with highest weight lambda_n.
std::size_t weyl_dimension(const HighestWeight& lambda, std::size_t n);

enum class Validation { Auto, Always, Never };

/// Modules above this dimension are only validated on request.
inline constexpr std::size_t kAutoValidateMaxDim = 200;

/// The irreducible gl(n) module V_n(lambda) on its Gelfand-Tsetlin basis.
///
/// The basis uses the rational normalization in which e_{p,p+1} and e_{p+1,p}
/// have coefficients that are ratios of products of l = entry - column + 1,
/// so no square roots occur. Non-simple generators are iterated commutators
/// of simple ones. All n^2 generators are built eagerly; the object is
/// immutable afterwards.
class ModuleRep {
public:
  std::size_t n() const noexcept { return n_; }
  const HighestWeight& lambda() const noexcept { return lambda_; }
  const std::vector<GTPattern>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t hwv_index() const noexcept { return hwv_; }
  const Weight& weight_of(std::size_t index) const { return weights_.at(index); }
  std::optional<std::size_t> index_of(const GTPattern& p) const;

  /// pi(e_ij), 1 <= i, j <= n. Throws std::out_of_range otherwise.
  const SparseMatrix& generator(std::size_t i, std::size_t j) const;

  /// Copy with `delta` added to entry (row, col) of pi(e_ij). Test hook for
  /// mutation checks.
  ModuleRep with_perturbed_entry(std::size_t i, std::size_t j, std::size_t row, std::size_t col,
                                 const Rational& delta) const;

private:
  friend ModuleRep build_module(const HighestWeight&, std::size_t, Validation);

  std::size_t n_ = 0;
  HighestWeight lambda_;
  std::vector<GTPattern> basis_;
  std::vector<Weight> weights_;
  std::map<std::vector<long>, std::size_t> index_;
  std::size_t hwv_ = 0;
  std::vector<SparseMatrix> gens_;  // row-major n x n
};

/// Builds V_n(lambda). Throws TruncationError if n < lambda.k(), and
/// RepresentationError naming the failing relation when validation is on and
/// fails. Auto validates when dim <= kAutoValidateMaxDim.
ModuleRep build_module(const HighestWeight& lambda, std::size_t n, Validation validation = Validation::Auto);

const SparseMatrix& generator_matrix(const ModuleRep& rep, std::size_t i, std::size_t j);

struct CommutationCheck {
  bool ok = true;
  /// Empty on success, otherwise the first relation that failed.
  std::string counterexample;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks [e_ij, e_kl] = delta_jk e_il - delta_li e_kj for all n^4 index
/// tuples, stopping at the first failure.
CommutationCheck verify_commutation(const ModuleRep& rep);

/// The basis vector at hwv_index() is killed by every e_ij with i < j and
/// e_ii acts on it by Lambda_i.
bool verify_highest_weight_vector(const ModuleRep& rep);

}  // namespace glinf

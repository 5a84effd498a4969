#pragma once

#include "glinf/weights.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace glinf {

struct Summand {
  HighestWeight nu;
  std::size_t mult = 0;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// V(lambda) (x) V(mu) = sum_nu m_nu V(nu). Summands are sorted by
/// descending lexicographic order of nu.
struct Decomposition {
  HighestWeight lambda;
  HighestWeight mu;
  std::vector<Summand> summands;
  std::size_t rank_used = 0;

  /// Same summand multiset; lambda/mu/rank are not compared.
  bool same_summands(const Decomposition& other) const { return summands == other.summands; }
};

/// Littlewood-Richardson multiplicities, counted as skew tableaux of shape
/// nu/lambda and content mu whose reverse reading word is a lattice word.
/// rank_used = lambda.k() + mu.k().
Decomposition lr_decompose(const HighestWeight& lambda, const HighestWeight& mu);

/// Independent route: multiply the weight multisets of V_n(lambda) and
/// V_n(mu) and repeatedly peel off the character of the lexicographically
/// highest remaining weight. Only summands with at most n parts appear.
Decomposition decompose_by_characters(const HighestWeight& lambda, const HighestWeight& mu, std::size_t n);

/// lambda + eps_i for i = 1..k+1, keeping only dominant results.
Decomposition pieri_vector(const HighestWeight& lambda);

/// sum_nu m_nu dim V_n(nu) == dim V_n(lambda) dim V_n(mu). Requires n at least
/// the number of parts of every summand.
bool dimension_audit(const Decomposition& dec, std::size_t n);

/// Weight -> multiplicity in V_n(lambda), read off the GT patterns.
std::map<Weight, std::size_t> weight_multiplicities(const HighestWeight& lambda, std::size_t n);

/// The distinct weights of V_n(lambda), in descending lexicographic order.
std::vector<Weight> distinct_weights(const HighestWeight& lambda, std::size_t n);

/// Decomposes at ranks n = k+l and n+1 by characters, runs the dimension
/// audit at both, and compares both against lr_decompose.
bool stability_check(const HighestWeight& lambda, const HighestWeight& mu);

}  // namespace glinf

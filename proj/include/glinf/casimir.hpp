#pragma once

#include "glinf/exactnum.hpp"
#include "glinf/weights.hpp"

#include <cstddef>
#include <stdexcept>

namespace glinf {

/// Order of an invariant outside the supported range.
class OrderError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Default ceiling on the invariant order m. Overridden by GLINF_M_CAP.
inline constexpr unsigned kDefaultOrderCap = 12;

/// The effective order cap: GLINF_M_CAP if set to a positive integer,
/// otherwise kDefaultOrderCap. Throws OrderError on a malformed value.
unsigned order_cap();

/// Eigenvalue of the gl(k) invariant sum_i (A^m)_i^i on the irreducible gl(k)
/// module with highest weight (Lambda_1..Lambda_k), k = lambda.k():
///
///   sum_i alpha_i^m prod_{j != i} (alpha_i - alpha_j + 1) / (alpha_i - alpha_j)
///
/// with alpha_i = Lambda_i + 1 - i. The alphas are strictly decreasing, so no
/// denominator vanishes. Requires m >= 1 and k >= 1.
Rational glk_invariant_eigenvalue(const HighestWeight& lambda, unsigned m);

/// P_m(x) from P_1 = x, P_m = x^m - k P_{m-1}. Polynomial in x, so x = -k
/// needs no special handling.
Rational pm_polynomial(unsigned m, long k, const Rational& x);

/// Eigenvalue of the gl(infinity) invariant I_m on V(lambda):
/// sum_i P_m(alpha_i) prod_{j != i} (alpha_i - alpha_j + 1)/(alpha_i - alpha_j),
/// with k the number of nonzero parts. Zero for the zero weight.
Rational casimir_eigenvalue_closed(const HighestWeight& lambda, unsigned m);

/// Same eigenvalue by iterating chi(I_m) = chi_k(I_m^(k)) - k chi(I_{m-1})
/// from chi(I_1) = |lambda|.
Rational casimir_eigenvalue_recursive(const HighestWeight& lambda, unsigned m);

struct EigenvalueReport {
  HighestWeight lambda;
  unsigned m = 0;
  Rational value_closed;
  Rational value_recursive;
  bool agree = false;
};

EigenvalueReport eigenvalue_report(const HighestWeight& lambda, unsigned m);

}  // namespace glinf

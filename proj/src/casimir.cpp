#include "glinf/casimir.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace glinf {

namespace {

void require_order(unsigned m) {
  if (m < 1) throw OrderError("invariant order must be at least 1");
}

// prod_{j != i} (alpha_i - alpha_j + 1) / (alpha_i - alpha_j), for each i.
std::vector<Rational> root_weights(const std::vector<Rational>& alpha) {
  std::vector<Rational> w(alpha.size(), Rational(1));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (i == j) continue;
      Rational d = alpha[i] - alpha[j];
      w[i] *= (d + 1) / d;
    }
  }
  return w;
}

Rational power(const Rational& x, unsigned m) {
  Rational p = 1;
  for (unsigned t = 0; t < m; ++t) p *= x;
  return p;
}

}  // namespace

unsigned order_cap() {
  const char* env = std::getenv("GLINF_M_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  std::string_view s(env);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw OrderError("GLINF_M_CAP must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

Rational glk_invariant_eigenvalue(const HighestWeight& lambda, unsigned m) {
  require_order(m);
  if (lambda.k() == 0) throw OrderError("gl(k) invariant needs at least one nonzero part");
  const auto alpha = alpha_roots(lambda, lambda.k());
  const auto w = root_weights(alpha);
  Rational sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) sum += power(alpha[i], m) * w[i];
  return sum;
}

Rational pm_polynomial(unsigned m, long k, const Rational& x) {
  require_order(m);
  Rational p = x;
  Rational xt = x;
  for (unsigned t = 2; t <= m; ++t) {
    xt *= x;
    p = xt - k * p;
  }
  return p;
}

Rational casimir_eigenvalue_closed(const HighestWeight& lambda, unsigned m) {
  require_order(m);
  const long k = static_cast<long>(lambda.k());
  if (k == 0) return 0;
  const auto alpha = alpha_roots(lambda, lambda.k());
  const auto w = root_weights(alpha);
  Rational sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) sum += pm_polynomial(m, k, alpha[i]) * w[i];
  return sum;
}

Rational casimir_eigenvalue_recursive(const HighestWeight& lambda, unsigned m) {
  require_order(m);
  const long k = static_cast<long>(lambda.k());
  Rational chi = lambda.size();
  if (k == 0) return chi;
  for (unsigned t = 2; t <= m; ++t) chi = glk_invariant_eigenvalue(lambda, t) - k * chi;
  return chi;
}

EigenvalueReport eigenvalue_report(const HighestWeight& lambda, unsigned m) {
  EigenvalueReport r;
  r.lambda = lambda;
  r.m = m;
  r.value_closed = casimir_eigenvalue_closed(lambda, m);
  r.value_recursive = casimir_eigenvalue_recursive(lambda, m);
  r.agree = r.value_closed == r.value_recursive;
  return r;
}

}  // namespace glinf

#pragma once

#include "glinf/exactnum.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glinf {

/// A highest weight that is not a partition.
class DominanceError : public std::invalid_argument {
public:
  DominanceError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  /// 1-based position of the offending component.
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Requested a rank smaller than the number of nonzero parts.
class TruncationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely supported integral weight sum_i mu_i eps_i. Trailing zeros are
/// never stored, so the component list length is the support.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<long> components);

  /// Component mu_i, 1-based; zero beyond the support.
  long operator[](std::size_t i) const noexcept;
  std::size_t support() const noexcept { return c_.size(); }
  const std::vector<long>& components() const noexcept { return c_; }
  /// Components 1..n, zero padded. Requires n >= support().
  std::vector<long> padded(std::size_t n) const;
  long total() const noexcept;

  Weight operator+(const Weight& other) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight&, const Weight&) = default;

private:
  std::vector<long> c_;
};

/// A partition (Lambda_1 >= ... >= Lambda_k > 0), zero tail implicit.
class HighestWeight {
public:
  HighestWeight() = default;

  const std::vector<long>& parts() const noexcept { return parts_; }
  /// Number of nonzero parts.
  std::size_t k() const noexcept { return parts_.size(); }
  /// Lambda_i, 1-based; zero beyond k.
  long operator[](std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  long size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  Weight as_weight() const { return Weight(parts_); }
  /// Lambda_n = (Lambda_1..Lambda_k, 0..0) of length n.
  std::vector<long> truncated(std::size_t n) const;

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend std::strong_ordering operator<=>(const HighestWeight&, const HighestWeight&) = default;

private:
  friend HighestWeight make_highest_weight(std::span<const long> parts);
  std::vector<long> parts_;
};

/// Validates a candidate highest weight. Trailing zeros are accepted.
/// Throws DominanceError naming the first bad index.
HighestWeight make_highest_weight(std::span<const long> parts);
inline HighestWeight make_highest_weight(std::initializer_list<long> parts) {
  return make_highest_weight(std::span<const long>(parts.begin(), parts.size()));
}

/// Parses "2,1" (or "" / "0" for the zero weight) into integer parts.
std::vector<long> parse_parts(std::string_view text);

std::string to_string(const Weight& w);
std::string to_string(const HighestWeight& w);

/// (mu, nu) = sum_i mu_i nu_i.
Rational inner_product(const Weight& mu, const Weight& nu);

/// (mu, rho) with rho_i = (1 - 2i)/2, summed over the support of mu.
Rational rho_pairing(const Weight& mu);

/// (mu, mu + 2 rho) = sum_i mu_i (mu_i + 1 - 2i).
Rational c2_form(const Weight& mu);
Rational c2_form(const HighestWeight& lambda);

/// alpha_i = Lambda_i + 1 - i for i = 1..count.
std::vector<Rational> alpha_roots(const HighestWeight& lambda, std::size_t count);

std::size_t weight_support(const Weight& mu);

/// Support <= n and every component non-negative.
bool in_Dn(const Weight& mu, std::size_t n);

/// Non-negative and non-increasing, i.e. the weight is a partition.
bool is_dominant(const Weight& mu);

/// Partitions of every size 0..max_size with at most max_parts parts, in
/// (size, reverse lexicographic) order.
std::vector<HighestWeight> partitions_up_to(long max_size, std::size_t max_parts);

}  // namespace glinf

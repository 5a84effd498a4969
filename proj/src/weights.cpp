#include "glinf/weights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace glinf {

Weight::Weight(std::vector<long> components) : c_(std::move(components)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long Weight::operator[](std::size_t i) const noexcept {
  return i >= 1 && i <= c_.size() ? c_[i - 1] : 0;
}

std::vector<long> Weight::padded(std::size_t n) const {
  if (n < c_.size()) throw TruncationError("weight support exceeds requested length");
  std::vector<long> out(c_);
  out.resize(n, 0);
  return out;
}

long Weight::total() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0L); }

Weight Weight::operator+(const Weight& other) const {
  std::vector<long> out(std::max(c_.size(), other.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i + 1] + other[i + 1];
  return Weight(std::move(out));
}

long HighestWeight::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<long> HighestWeight::truncated(std::size_t n) const {
  if (n < parts_.size())
    throw TruncationError("rank " + std::to_string(n) + " is smaller than the " + std::to_string(parts_.size()) +
                          " nonzero parts of " + to_string(*this));
  std::vector<long> out(parts_);
  out.resize(n, 0);
  return out;
}

HighestWeight make_highest_weight(std::span<const long> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw DominanceError("highest weight component " + std::to_string(i + 1) + " is negative", i + 1);
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw DominanceError("highest weight is not dominant: Lambda_" + std::to_string(i + 1) + " - Lambda_" +
                               std::to_string(i + 2) + " = " + std::to_string(parts[i] - parts[i + 1]) + " < 0",
                           i + 1);
  }
  HighestWeight hw;
  hw.parts_.assign(parts.begin(), parts.end());
  while (!hw.parts_.empty() && hw.parts_.back() == 0) hw.parts_.pop_back();
  return hw;
}

std::vector<long> parse_parts(std::string_view text) {
  std::vector<long> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    long v = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && item.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw std::invalid_argument("not an integer list: '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

namespace {
std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}
}  // namespace

std::string to_string(const Weight& w) { return join(w.components()); }
std::string to_string(const HighestWeight& w) { return join(w.parts()); }

Rational inner_product(const Weight& mu, const Weight& nu) {
  Rational s = 0;
  const std::size_t n = std::min(mu.support(), nu.support());
  for (std::size_t i = 1; i <= n; ++i) s += Rational(mu[i]) * nu[i];
  return s;
}

Rational rho_pairing(const Weight& mu) {
  Rational s = 0;
  for (std::size_t i = 1; i <= mu.support(); ++i) s += Rational(mu[i] * (1 - 2 * static_cast<long>(i)), 2);
  return s;
}

Rational c2_form(const Weight& mu) {
  Rational s = 0;
  for (std::size_t i = 1; i <= mu.support(); ++i) s += Rational(mu[i]) * (mu[i] + 1 - 2 * static_cast<long>(i));
  return s;
}

Rational c2_form(const HighestWeight& lambda) { return c2_form(lambda.as_weight()); }

std::vector<Rational> alpha_roots(const HighestWeight& lambda, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.emplace_back(lambda[i] + 1 - static_cast<long>(i));
  return out;
}

std::size_t weight_support(const Weight& mu) { return mu.support(); }

bool in_Dn(const Weight& mu, std::size_t n) {
  const auto& c = mu.components();
  return mu.support() <= n && std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

bool is_dominant(const Weight& mu) {
  const auto& c = mu.components();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) return false;
    if (i + 1 < c.size() && c[i] < c[i + 1]) return false;
  }
  return true;
}

std::vector<HighestWeight> partitions_up_to(long max_size, std::size_t max_parts) {
  std::vector<HighestWeight> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    if (remaining == 0) {
      out.push_back(make_highest_weight(cur));
      return;
    }
    if (cur.size() == max_parts) return;
    for (long p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  for (long s = 0; s <= max_size; ++s) rec(s, s);
  return out;
}

}  // namespace glinf

#include "glinf/tensor.hpp"

#include "glinf/gt_oracle.hpp"

#include <algorithm>
#include <functional>

namespace glinf {

namespace {

Decomposition from_counts(const HighestWeight& lambda, const HighestWeight& mu, std::size_t rank,
                          const std::map<HighestWeight, std::size_t>& counts) {
  Decomposition dec{lambda, mu, {}, rank};
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    if (it->second > 0) dec.summands.push_back({it->first, it->second});
  return dec;
}

// Reverse reading word (rows top to bottom, each right to left) is a lattice
// word: every prefix has at least as many t as t+1.
bool is_lattice(const std::vector<std::vector<int>>& filling, std::size_t letters) {
  std::vector<std::size_t> seen(letters + 2, 0);
  for (const auto& row : filling) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const auto t = static_cast<std::size_t>(*it);
      ++seen[t];
      if (t > 1 && seen[t] > seen[t - 1]) return false;
    }
  }
  return true;
}

}  // namespace

Decomposition lr_decompose(const HighestWeight& lambda, const HighestWeight& mu) {
  const auto& content = mu.parts();
  // shape never carries trailing zero rows between letters
  std::vector<long> shape = lambda.parts();
  // filling[r]: letters placed in row r beyond lambda, left to right
  std::vector<std::vector<int>> filling(shape.size());
  std::map<HighestWeight, std::size_t> counts;

  std::function<void(std::size_t)> place_letter;
  std::function<void(std::size_t, std::size_t, long, const std::vector<long>&)> place_row;

  // Letter t goes in as a horizontal strip of size content[t-1] on top of the
  // shape `before`; row r may grow up to before[r-1].
  place_row = [&](std::size_t t, std::size_t r, long remaining, const std::vector<long>& before) {
    if (remaining == 0) {
      if (shape.back() == 0) {
        shape.pop_back();
        filling.pop_back();
        place_letter(t + 1);
        shape.push_back(0);
        filling.emplace_back();
      } else {
        place_letter(t + 1);
      }
      return;
    }
    if (r == shape.size()) return;
    const long current = r < before.size() ? before[r] : 0;
    const long room = r == 0 ? remaining : before[r - 1] - current;
    for (long add = std::min(remaining, room); add >= 0; --add) {
      shape[r] = current + add;
      filling[r].insert(filling[r].end(), static_cast<std::size_t>(add), static_cast<int>(t));
      place_row(t, r + 1, remaining - add, before);
      filling[r].resize(filling[r].size() - static_cast<std::size_t>(add));
    }
    shape[r] = current;
  };

  place_letter = [&](std::size_t t) {
    if (t > content.size()) {
      if (is_lattice(filling, content.size())) ++counts[make_highest_weight(shape)];
      return;
    }
    const std::vector<long> before = shape;
    shape.push_back(0);
    filling.emplace_back();
    place_row(t, 0, content[t - 1], before);
    shape.pop_back();
    filling.pop_back();
  };

  place_letter(1);
  return from_counts(lambda, mu, lambda.k() + mu.k(), counts);
}

std::map<Weight, std::size_t> weight_multiplicities(const HighestWeight& lambda, std::size_t n) {
  std::map<Weight, std::size_t> m;
  for (const auto& p : enumerate_patterns(lambda, n)) ++m[pattern_weight(p)];
  return m;
}

Decomposition decompose_by_characters(const HighestWeight& lambda, const HighestWeight& mu, std::size_t n) {
  std::map<Weight, long> product;
  const auto a = weight_multiplicities(lambda, n);
  const auto b = weight_multiplicities(mu, n);
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) product[wa + wb] += static_cast<long>(ma * mb);

  std::map<HighestWeight, std::size_t> counts;
  while (true) {
    auto it = std::find_if(product.rbegin(), product.rend(), [](const auto& kv) { return kv.second != 0; });
    if (it == product.rend()) break;
    // The lexicographically highest weight of a character with non-negative
    // coefficients is dominant.
    if (it->second < 0 || !is_dominant(it->first))
      throw std::logic_error("character peeling reached a non-dominant or negative leading term");
    const HighestWeight nu = make_highest_weight(it->first.components());
    const long mult = it->second;
    counts[nu] += static_cast<std::size_t>(mult);
    for (const auto& [w, m] : weight_multiplicities(nu, n)) product[w] -= mult * static_cast<long>(m);
  }
  return from_counts(lambda, mu, n, counts);
}

Decomposition pieri_vector(const HighestWeight& lambda) {
  std::map<HighestWeight, std::size_t> counts;
  for (std::size_t i = 1; i <= lambda.k() + 1; ++i) {
    std::vector<long> parts = lambda.truncated(lambda.k() + 1);
    parts[i - 1] += 1;
    if (is_dominant(Weight(parts))) ++counts[make_highest_weight(parts)];
  }
  return from_counts(make_highest_weight({1}), lambda, lambda.k() + 1, counts);
}

bool dimension_audit(const Decomposition& dec, std::size_t n) {
  std::size_t total = 0;
  for (const auto& s : dec.summands) {
    if (s.nu.k() > n) return false;
    total += s.mult * weyl_dimension(s.nu, n);
  }
  return total == weyl_dimension(dec.lambda, n) * weyl_dimension(dec.mu, n);
}

std::vector<Weight> distinct_weights(const HighestWeight& lambda, std::size_t n) {
  std::vector<Weight> out;
  for (const auto& [w, m] : weight_multiplicities(lambda, n)) out.push_back(w);
  std::reverse(out.begin(), out.end());
  return out;
}

bool stability_check(const HighestWeight& lambda, const HighestWeight& mu) {
  const std::size_t n = lambda.k() + mu.k();
  const auto lr = lr_decompose(lambda, mu);
  const auto at_n = decompose_by_characters(lambda, mu, n);
  const auto at_n1 = decompose_by_characters(lambda, mu, n + 1);
  return dimension_audit(at_n, n) && dimension_audit(at_n1, n + 1) && at_n.same_summands(at_n1) &&
         lr.same_summands(at_n) && dimension_audit(lr, n);
}

}  // namespace glinf

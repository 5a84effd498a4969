#include "generators.hpp"

#include "glinf/gt_oracle.hpp"

#include <doctest.h>

#include <set>

using namespace glinf;
using glinf::testing::hw;

namespace {

SparseMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  return SparseMatrix::from_triplets(n, n, {{i - 1, j - 1, 1}});
}

}  // namespace

TEST_SUITE("gt_oracle") {

TEST_CASE("pattern counts") {
  CHECK(enumerate_patterns(hw({1}), 2).size() == 2);
  CHECK(enumerate_patterns(hw({2, 1}), 3).size() == 8);
  CHECK(enumerate_patterns(hw({}), 3).size() == 1);
  CHECK(enumerate_patterns(hw({}), 0).size() == 1);
  CHECK_THROWS_AS(enumerate_patterns(hw({1, 1}), 1), TruncationError);
}

TEST_CASE("patterns enforce betweenness") {
  CHECK_NOTHROW(GTPattern({{1}, {2, 0}}));
  CHECK_THROWS_AS(GTPattern({{3}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GTPattern({{1}, {2}}), std::invalid_argument);
}

TEST_CASE("pattern weights") {
  const auto patterns = enumerate_patterns(hw({1}), 2);
  std::set<Weight> weights;
  for (const auto& p : patterns) weights.insert(pattern_weight(p));
  CHECK(weights == std::set<Weight>{Weight({1, 0}), Weight({0, 1})});
  CHECK(pattern_weight(enumerate_patterns(hw({2, 1}), 3).front()) == Weight({2, 1}));
  for (const auto& p : enumerate_patterns(hw({2, 1}), 3)) CHECK(pattern_weight(p).total() == 3);
}

TEST_CASE("Weyl dimension matches pattern counts") {
  for (const auto& l : partitions_up_to(5, 4))
    for (std::size_t n = l.k(); n <= l.k() + 2; ++n) CHECK(weyl_dimension(l, n) == enumerate_patterns(l, n).size());
  CHECK(weyl_dimension(hw({3, 3}), 4) == 50);
  CHECK(weyl_dimension(hw({3, 2, 1}), 4) == 64);
}

TEST_CASE("Cartan generators act by weight components") {
  const auto rep = build_module(hw({2, 1}), 3);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t b = 0; b < rep.dim(); ++b) {
      CHECK(rep.generator(i, i).at(b, b) == rep.weight_of(b)[i]);
      CHECK(rep.generator(i, i).row(b).size() <= 1);
    }
}

TEST_CASE("raising operator kills the highest weight vector") {
  const auto rep = build_module(hw({2, 1}), 3);
  CHECK(rep.hwv_index() == 0);
  CHECK(rep.generator(1, 2).column(rep.hwv_index()).empty());
  CHECK(verify_highest_weight_vector(rep));
}

TEST_CASE("[e12, e21] = e11 - e22") {
  const auto rep = build_module(hw({3, 1}), 3);
  CHECK(commutator(rep.generator(1, 2), rep.generator(2, 1)) == rep.generator(1, 1) - rep.generator(2, 2));
}

TEST_CASE("vector module has elementary generators") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto rep = build_module(hw({1}), n);
    REQUIRE(rep.dim() == n);
    for (std::size_t i = 1; i <= n; ++i) {
      // basis ordered eps_1, ..., eps_n
      std::vector<long> eps(i, 0);
      eps.back() = 1;
      CHECK(rep.weight_of(i - 1) == Weight(eps));
      for (std::size_t j = 1; j <= n; ++j) CHECK(rep.generator(i, j) == elementary(n, i, j));
    }
  }
}

TEST_CASE("determinant module and trivial module") {
  const auto det = build_module(hw({1, 1}), 2);
  CHECK(det.dim() == 1);
  CHECK(det.generator(1, 1) == SparseMatrix::identity(1));
  CHECK(det.generator(2, 2) == SparseMatrix::identity(1));
  CHECK(det.generator(1, 2).is_zero());
  const auto trivial = build_module(hw({}), 2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) CHECK(trivial.generator(i, j).is_zero());
  const auto rank0 = build_module(hw({}), 0);
  CHECK(rank0.dim() == 1);
  CHECK_THROWS_AS(rank0.generator(1, 1), std::out_of_range);
}

TEST_CASE("commutation relations") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(verify_commutation(build_module(hw({1}), n)));
  CHECK(verify_commutation(build_module(hw({2, 1}), 3)));
  for (const auto& l : partitions_up_to(4, 3))
    for (std::size_t n = std::max<std::size_t>(l.k(), 1); n <= l.k() + 1; ++n) {
      CAPTURE(to_string(l));
      CAPTURE(n);
      CHECK(verify_commutation(build_module(l, n, Validation::Never)));
    }
}

TEST_CASE("mutation: one perturbed entry breaks commutation") {
  const auto rep = build_module(hw({2, 1}), 3);
  const auto bad = rep.with_perturbed_entry(1, 2, rep.hwv_index(), rep.hwv_index(), 1);
  const auto check = verify_commutation(bad);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.counterexample.empty());
  CHECK_FALSE(verify_commutation(build_module(hw({1}), 2).with_perturbed_entry(2, 1, 0, 0, 1)));
}

TEST_CASE("property: dimension is non-decreasing in the rank") {
  for (const auto& l : partitions_up_to(5, 3)) {
    std::size_t previous = 0;
    for (std::size_t n = l.k(); n <= l.k() + 3; ++n) {
      const std::size_t d = build_module(l, n, Validation::Never).dim();
      CHECK(d >= previous);
      previous = d;
    }
  }
}

TEST_CASE("property: branching, vectors of support n inside V_{n+1} carry V_n") {
  for (const auto& l : partitions_up_to(4, 3))
    for (std::size_t n = l.k(); n <= l.k() + 1; ++n) {
      const auto big = build_module(l, n + 1, Validation::Never);
      std::vector<std::size_t> inside;
      for (std::size_t b = 0; b < big.dim(); ++b)
        if (in_Dn(big.weight_of(b), n)) inside.push_back(b);
      CHECK(inside.size() == weyl_dimension(l, n));
      const std::set<std::size_t> span(inside.begin(), inside.end());
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t b : inside)
            for (const auto& e : big.generator(i, j).column(b)) CHECK(span.count(e.col) == 1);
    }
}

TEST_CASE("property: exactly one vector is killed by every simple raising generator") {
  for (const auto& l : partitions_up_to(4, 3)) {
    const std::size_t n = l.k() + 1;
    const auto rep = build_module(l, n, Validation::Never);
    std::size_t killed = 0;
    for (std::size_t b = 0; b < rep.dim(); ++b) {
      bool all = true;
      for (std::size_t p = 1; p < n; ++p) all = all && rep.generator(p, p + 1).column(b).empty();
      killed += all;
    }
    CHECK(killed == 1);
  }
}

TEST_CASE("index_of round-trips the basis") {
  const auto rep = build_module(hw({2, 1}), 3);
  for (std::size_t b = 0; b < rep.dim(); ++b) CHECK(rep.index_of(rep.basis()[b]) == b);
}

}

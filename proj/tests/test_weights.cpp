#include "generators.hpp"

#include <doctest.h>

using namespace glinf;
using glinf::testing::hw;

TEST_SUITE("weights") {

TEST_CASE("make_highest_weight") {
  const auto l = hw({2, 1});
  CHECK(l.k() == 2);
  CHECK(l[1] == 2);
  CHECK(l[3] == 0);
  CHECK(hw({}).k() == 0);
  CHECK(hw({3, 1, 0, 0}) == hw({3, 1}));
  CHECK_THROWS_AS(hw({1, 2}), DominanceError);
  CHECK_THROWS_AS(hw({-1}), DominanceError);
  CHECK_THROWS_AS(hw({2, 0, 1}), DominanceError);
  try {
    hw({3, 1, 2});
  } catch (const DominanceError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("parse_parts") {
  CHECK(parse_parts("2,1") == std::vector<long>{2, 1});
  CHECK(parse_parts(" 3 , 0 ") == std::vector<long>{3, 0});
  CHECK(parse_parts("").empty());
  CHECK_THROWS_AS(parse_parts("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_parts("a"), std::invalid_argument);
}

TEST_CASE("inner_product is componentwise") {
  CHECK(inner_product(Weight({1}), Weight({1})) == 1);
  CHECK(inner_product(Weight({2, 1}), Weight({0, 3})) == 3);
  CHECK(inner_product(Weight({4, 2}), Weight()) == 0);
}

TEST_CASE("c2_form examples") {
  CHECK(c2_form(hw({1})) == 0);
  CHECK(c2_form(hw({2, 1})) == 0);
  CHECK(c2_form(hw({})) == 0);
  CHECK(c2_form(hw({2})) == 2);
  CHECK(c2_form(hw({1, 1})) == -2);
}

TEST_CASE("alpha_roots examples") {
  const auto r = alpha_roots(hw({2, 1}), 3);
  CHECK(r == std::vector<Rational>{2, 0, -2});
  for (long k = 1; k <= 4; ++k) {
    const auto ones = make_highest_weight(std::vector<long>(k, 1));
    const auto roots = alpha_roots(ones, k + 1);
    CHECK(roots.front() == 1);
    CHECK(roots.back() == -k);
  }
  // Lambda_1 + 1 - 1 for the zero weight is 0.
  CHECK(alpha_roots(hw({}), 1) == std::vector<Rational>{0});
}

TEST_CASE("weight_support and in_Dn") {
  CHECK(weight_support(Weight({0, 3, 0})) == 2);
  CHECK(weight_support(Weight()) == 0);
  CHECK(weight_support(Weight({1, 1, 1})) == 3);
  CHECK(in_Dn(Weight({2, 1}), 2));
  CHECK_FALSE(in_Dn(Weight({2, 1}), 1));
  CHECK_FALSE(in_Dn(Weight({-1}), 5));
}

TEST_CASE("is_dominant") {
  CHECK(is_dominant(Weight({2, 1})));
  CHECK(is_dominant(Weight()));
  CHECK_FALSE(is_dominant(Weight({1, 2})));
  CHECK_FALSE(is_dominant(Weight({0, 1})));
}

TEST_CASE("partitions_up_to counts") {
  // partitions of 0..6 with at most 3 parts: 1,1,2,3,4,5,7
  CHECK(partitions_up_to(6, 3).size() == 23);
  CHECK(partitions_up_to(0, 3).size() == 1);
  for (const auto& p : partitions_up_to(6, 3)) {
    CHECK(p.k() <= 3);
    CHECK(p.size() <= 6);
  }
}

TEST_CASE("property: alpha_roots strictly decrease for every dominant weight") {
  for (const auto& l : partitions_up_to(8, 5)) {
    const auto r = alpha_roots(l, l.k() + 3);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[i - 1]);
  }
}

TEST_CASE("property: c2_form equals (L,L) + 2(L,rho) summed term by term") {
  for (const auto& l : partitions_up_to(8, 5)) {
    Rational termwise = 0;
    for (std::size_t i = 1; i <= l.k(); ++i) {
      const Rational rho_i(1 - 2 * static_cast<long>(i), 2);
      termwise += Rational(l[i]) * l[i] + 2 * Rational(l[i]) * rho_i;
    }
    CHECK(c2_form(l) == termwise);
    CHECK(c2_form(l) == inner_product(l.as_weight(), l.as_weight()) + 2 * rho_pairing(l.as_weight()));
  }
}

TEST_CASE("truncation and printing") {
  CHECK(hw({2, 1}).truncated(4) == std::vector<long>{2, 1, 0, 0});
  CHECK_THROWS_AS(hw({2, 1}).truncated(1), TruncationError);
  CHECK(to_string(hw({2, 1})) == "(2,1)");
  CHECK(to_string(hw({})) == "()");
}

}

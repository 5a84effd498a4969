#include "generators.hpp"

#include <doctest.h>

using namespace glinf;
using glinf::testing::random_matrix;

TEST_SUITE("exactnum") {

TEST_CASE("rationals print as p/q and parse back canonically") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(parse_rational("2/4") == parse_rational("1/2"));
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("normalization: 2/4 stores the same value as 1/2") {
  SparseMatrix a(1, 1), b(1, 1);
  a.set(0, 0, parse_rational("2/4"));
  b.set(0, 0, Rational(1, 2));
  CHECK(a == b);
  CHECK(to_string(a.at(0, 0)) == "1/2");
}

TEST_CASE("identity times identity") {
  CHECK(mat_mul(SparseMatrix::identity(3), SparseMatrix::identity(3)) == SparseMatrix::identity(3));
}

TEST_CASE("anything times zero is zero") {
  std::mt19937_64 rng(1);
  const auto a = random_matrix(rng, 4, 3);
  CHECK(is_zero(mat_mul(a, SparseMatrix::zero(3, 5))));
  CHECK(mat_mul(a, SparseMatrix::zero(3, 5)).cols() == 5);
}

TEST_CASE("diagonal square") {
  const auto a = SparseMatrix::from_triplets(2, 2, {{0, 0, Rational(1, 2)}, {1, 1, Rational(2)}});
  const auto expected = SparseMatrix::from_triplets(2, 2, {{0, 0, Rational(1, 4)}, {1, 1, Rational(4)}});
  CHECK(mat_mul(a, a) == expected);
}

TEST_CASE("is_zero is structural") {
  CHECK(is_zero(SparseMatrix::zero(3, 3)));
  CHECK_FALSE(is_zero(SparseMatrix::identity(1)));
  CHECK_FALSE(is_zero(SparseMatrix::from_triplets(2, 2, {{0, 1, Rational(1, 3)}})));
  SparseMatrix m = SparseMatrix::identity(2);
  m -= SparseMatrix::identity(2);
  CHECK(is_zero(m));
  CHECK(m.nonzeros() == 0);
  m.add_to(0, 1, 1);
  m.add_to(0, 1, -1);
  CHECK(m.nonzeros() == 0);
}

TEST_CASE("triplets with duplicates are summed and cancellations dropped") {
  const auto m = SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 0, 2}, {1, 0, 3}});
  CHECK(m.nonzeros() == 1);
  CHECK(m.at(1, 0) == 5);
}

TEST_CASE("shape mismatches throw") {
  CHECK_THROWS_AS(mat_mul(SparseMatrix(2, 3), SparseMatrix(2, 3)), DimensionError);
  SparseMatrix a(2, 2);
  CHECK_THROWS_AS(a += SparseMatrix(3, 3), DimensionError);
}

TEST_CASE("scalar_value detects multiples of the identity") {
  CHECK(SparseMatrix::scalar(3, Rational(5, 2)).scalar_value() == Rational(5, 2));
  CHECK(SparseMatrix::zero(2, 2).scalar_value() == Rational(0));
  auto m = SparseMatrix::scalar(2, 1);
  m.set(0, 1, 1);
  CHECK_FALSE(m.scalar_value().has_value());
  CHECK_FALSE(SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {1, 1, 2}}).scalar_value().has_value());
}

TEST_CASE("rank and kernel dimension") {
  CHECK(rank(SparseMatrix::identity(4)) == 4);
  CHECK(rank(SparseMatrix::zero(3, 5)) == 0);
  // rows (1,2,3), (2,4,6), (0,1,1): rank 2
  const auto m = SparseMatrix::from_triplets(
      3, 3, {{0, 0, 1}, {0, 1, 2}, {0, 2, 3}, {1, 0, 2}, {1, 1, 4}, {1, 2, 6}, {2, 1, 1}, {2, 2, 1}});
  CHECK(rank(m) == 2);
  CHECK(kernel_dim(m, 0) == 1);
  const auto d = SparseMatrix::from_triplets(3, 3, {{0, 0, 2}, {1, 1, 2}, {2, 2, -1}});
  CHECK(kernel_dim(d, 2) == 2);
  CHECK(kernel_dim(d, -1) == 1);
  CHECK(kernel_dim(d, 7) == 0);
}

TEST_CASE("property: sparse product is associative") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    const auto a = random_matrix(rng, p, q), b = random_matrix(rng, q, r), c = random_matrix(rng, r, s);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("property: product matches the dense definition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(rng, 4, 5), b = random_matrix(rng, 5, 3);
    const auto c = a * b;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rational sum = 0;
        for (std::size_t k = 0; k < 5; ++k) sum += a.at(i, k) * b.at(k, j);
        CHECK(c.at(i, j) == sum);
      }
  }
}

TEST_CASE("property: rank is invariant under transpose and bounded by shape") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(rng, 5, 4, 0.3);
    CHECK(rank(a) == rank(a.transpose()));
    CHECK(rank(a) <= 4);
    CHECK(rank(a * a.transpose()) == rank(a));
  }
}

TEST_CASE("commutator and shift") {
  const auto e12 = SparseMatrix::from_triplets(2, 2, {{0, 1, 1}});
  const auto e21 = SparseMatrix::from_triplets(2, 2, {{1, 0, 1}});
  CHECK(commutator(e12, e21) == SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {1, 1, -1}}));
  CHECK(shift(SparseMatrix::identity(3), 1).is_zero());
}

}

#include "doctest.h"

#include <random>
#include <stdexcept>

#include "qaffine/coloured_series.hpp"
#include "qaffine/lattice_series.hpp"
#include "test_util.hpp"

using namespace qaffine;

TEST_CASE("coloured series multiplied by its inverse is one") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ColouredSeries a = testing::random_unit_coloured(rng, 2, 8, 10);
    CHECK(cs_mul(a, cs_inv(a)) == ColouredSeries::one(2, 8));
  }
}

TEST_CASE("the two even-extraction routes agree") {
  std::mt19937 rng(8);
  const std::vector<int> all{0, 1, 2};
  const std::vector<int> some{1};
  for (int trial = 0; trial < 30; ++trial) {
    const ColouredSeries a = testing::random_coloured(rng, 3, 8, 14);
    CHECK(even_extract(a, all) == even_extract_halfsum(a, all));
    CHECK(even_extract(a, some) == even_extract_halfsum(a, some));
  }
}

TEST_CASE("even extraction is an idempotent linear projection") {
  std::mt19937 rng(9);
  const std::vector<int> vars{0, 1};
  const ColouredSeries a = testing::random_coloured(rng, 2, 8, 12);
  const ColouredSeries b = testing::random_coloured(rng, 2, 8, 12);
  const ColouredSeries ea = even_extract(a, vars);
  CHECK(even_extract(ea, vars) == ea);
  CHECK(even_extract(cs_add(a, b), vars) == cs_add(ea, even_extract(b, vars)));
}

TEST_CASE("substitution into the weight lattice is a ring morphism") {
  std::mt19937 rng(10);
  const LatticeMono q_image{2, 0};
  const std::vector<LatticeMono> images{{0, 1}, {0, 0}, {0, -1}};
  for (int trial = 0; trial < 15; ++trial) {
    const ColouredSeries a = testing::random_coloured(rng, 3, 6, 10);
    const ColouredSeries b = testing::random_coloured(rng, 3, 6, 10);
    const LatticeSeries lhs = substitute(cs_mul(a, b), q_image, images);
    const LatticeSeries rhs = ls_mul(substitute(a, q_image, images),
                                     substitute(b, q_image, images));
    LatticeMono bad;
    CHECK(testing::ls_same(lhs, rhs, &bad));
    const LatticeSeries sum = substitute(cs_add(a, b), q_image, images);
    CHECK(testing::ls_same(sum, ls_add(substitute(a, q_image, images),
                                       substitute(b, q_image, images))));
  }
}

TEST_CASE("substitution validates its images") {
  const ColouredSeries a = ColouredSeries::one(2, 4);
  // q must move strictly down the delta direction
  CHECK_THROWS_AS(substitute(a, LatticeMono{0, 1}, {{0, 0}, {0, 0}}),
                  std::invalid_argument);
  // colour images may not carry a delta component
  ColouredSeries b(2, 4);
  b.add_term(1, {1, 0}, Int(1));
  b.add_term(0, {0, 0}, Int(1));
  CHECK_THROWS_AS(substitute(b, LatticeMono{1, 0}, {{1, 0}, {0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("lattice product against a hand-rolled factor expansion") {
  // (g; s) with g = Q X, s = Q^2: multiply the explicit factors.
  const LatticeMono g{1, 1}, s{2, 0};
  const int order = 9;
  const LatticeSeries prod = lattice_poch(order, Int(1), g, s);
  LatticeSeries manual = LatticeSeries::one(order);
  for (int k = 0; g.a + k * s.a <= order; ++k) {
    LatticeSeries factor = LatticeSeries::one(order);
    factor.add_term(LatticeMono{g.a + k * s.a, g.b + k * s.b}, Int(-1));
    manual = ls_mul(manual, factor);
  }
  CHECK(prod == manual);
}

TEST_CASE("coloured product truncation shrinks with a negative floor") {
  // A factor with q_min = -1 costs one order of reliability in products.
  ColouredSeries neg(1, 5, -1);
  neg.add_term(-1, {1}, Int(1));
  neg.add_term(0, {0}, Int(1));
  const ColouredSeries other = ColouredSeries::one(1, 5);
  const ColouredSeries prod = cs_mul(neg, other);
  CHECK(prod.order() == 4);
  CHECK(prod.q_min() == -1);
}

TEST_CASE("shifting a series moves floor and order together") {
  ColouredSeries s(2, 3, -1);
  s.add_term(-1, {1, 0}, Int(2));
  s.add_term(2, {0, 1}, Int(-1));
  const ColouredSeries up = s.shifted(1);
  CHECK(up.q_min() == 0);
  CHECK(up.order() == 4);
  CHECK(up.coeff(0) == s.coeff(-1));
  CHECK(up.coeff(3) == s.coeff(2));
}

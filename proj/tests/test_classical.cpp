#include "doctest.h"

#include <stdexcept>

#include "qaffine/classical.hpp"

using namespace qaffine;

TEST_CASE("count_partitions matches 1/(q;q)") {
  const QSeries p = qs_inv(poch_q(30, Int(1), 1, 1));
  for (int m = 0; m <= 30; ++m) CHECK(count_partitions(m) == p.at(m));
}

TEST_CASE("gap-2 counts reproduce the Rogers-Ramanujan series") {
  // r = 2, i = 2: parts differ by >= 2, ones unrestricted.
  const int expected[] = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6};
  for (int m = 0; m <= 10; ++m) CHECK(andrews_gordon_count(2, 2, m) == expected[m]);
  // r = 2, i = 1: additionally no part equal to 1.
  const int expected1[] = {1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4};
  for (int m = 0; m <= 10; ++m) CHECK(andrews_gordon_count(1, 2, m) == expected1[m]);
}

TEST_CASE("gap counts match their odd-modulus products") {
  for (int r = 2; r <= 4; ++r) {
    for (int i = 1; i <= r; ++i) {
      const QSeries prod = product_side(ProductFamily::kAndrewsGordon, {i, r}, 16);
      for (int m = 0; m <= 16; ++m) CHECK(andrews_gordon_count(i, r, m) == prod.at(m));
    }
  }
}

TEST_CASE("parity-refined gap counts match their even-modulus products") {
  for (int r = 2; r <= 3; ++r) {
    for (int i = 1; i <= r; ++i) {
      const QSeries prod = product_side(ProductFamily::kBressoud, {i, r}, 14);
      for (int m = 0; m <= 14; ++m) CHECK(bressoud_count(i, r, m) == prod.at(m));
    }
  }
}

TEST_CASE("frequency-condition counts, small frozen table") {
  // (i, n) = (0, 1): weights 0..5 admit 1, 1, 1, 2, 2, 3 partitions.
  const int expected[] = {1, 1, 1, 2, 2, 3};
  for (int m = 0; m <= 5; ++m) CHECK(meurman_primc_count(0, 1, m) == expected[m]);
}

TEST_CASE("window length one is rejected") {
  CHECK_THROWS_AS(andrews_gordon_count(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(bressoud_count(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(product_side(ProductFamily::kAndrewsGordon, {1, 1}, 5),
                  std::invalid_argument);
}

TEST_CASE("parameter ranges are validated") {
  CHECK_THROWS_AS(andrews_gordon_count(0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(andrews_gordon_count(4, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(meurman_primc_count(2, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(meurman_primc_count(-1, 1, 5), std::invalid_argument);
}

TEST_CASE("main-family products differ by exactly one Euler factor") {
  const QSeries exact = product_side(ProductFamily::kMainExact, {1, 2}, 18);
  const QSeries atleast = product_side(ProductFamily::kMainAtLeast, {1, 2}, 18);
  const QSeries euler = qs_inv(poch_q(18, Int(1), 1, 1));
  CHECK(qs_mul(exact, euler) == atleast);
}

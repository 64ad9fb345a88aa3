#include "doctest.h"

#include "qaffine/characters.hpp"
#include "qaffine/classical.hpp"
#include "test_util.hpp"

using namespace qaffine;

TEST_CASE("principal specialisation: frozen start for the basic level-1 module") {
  const QSeries s = weyl_kac_principal(0, 1, 5);
  const int expected[] = {1, 1, 1, 2, 2, 3};
  for (int m = 0; m <= 5; ++m) CHECK(s.at(m) == expected[m]);
}

TEST_CASE("principal specialisation equals the main product side") {
  const int cases[][2] = {{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  for (const auto& c : cases) {
    const QSeries wk = weyl_kac_principal(c[0], c[1], 24);
    const QSeries prod = product_side(ProductFamily::kMainExact, {c[0], c[1]}, 24);
    CHECK(first_mismatch(wk, prod) == -1);
  }
}

TEST_CASE("module name round-trips") {
  for (Level2Module m : {Level2Module::kL01, Level2Module::kTwoL0, Level2Module::kTwoL1})
    CHECK(module_from_name(module_name(m)) == m);
  CHECK(!module_from_name("nope").has_value());
}

TEST_CASE("closed generating functions: lowest terms") {
  const ColouredSeries l01 = level2_gf_closed(Level2Module::kL01, 6);
  CHECK(l01.q_min() == 0);
  LaurentPoly c0(3);
  c0.add_term({0, 1, 0}, Int(1));
  c0.add_term({0, 1, 1}, Int(1));
  CHECK(l01.coeff(0) == c0);

  const ColouredSeries two_l0 = level2_gf_closed(Level2Module::kTwoL0, 6);
  CHECK(two_l0.q_min() == 0);
  LaurentPoly d0(3);
  d0.add_term({1, 0, 1}, Int(1));
  CHECK(two_l0.coeff(0) == d0);

  // The raw product for the third module carries q^{-1}; parity extraction
  // empties that slice but the stored floor keeps it visible.
  const ColouredSeries two_l1 = level2_gf_closed(Level2Module::kTwoL1, 6);
  CHECK(two_l1.q_min() == -1);
  CHECK(two_l1.coeff(-1).is_zero());
}

TEST_CASE("pure-module generating functions keep even part counts") {
  for (Level2Module m : {Level2Module::kTwoL0, Level2Module::kTwoL1}) {
    const ColouredSeries gf = level2_gf_closed(m, 8);
    for (const auto& [e, poly] : gf.terms()) {
      for (const auto& [exps, c] : poly.terms()) {
        int degree = 0;
        for (int x : exps) degree += x;
        CHECK(degree % 2 == 0);
      }
    }
  }
}

TEST_CASE("enumerated and closed generating functions agree") {
  const struct {
    Level2Module m;
    int order;
  } cases[] = {{Level2Module::kL01, 8}, {Level2Module::kTwoL0, 6}, {Level2Module::kTwoL1, 6}};
  for (const auto& c : cases) {
    int bad = 0;
    CHECK_MESSAGE(testing::cs_same(gf_from_enumeration(c.m, c.order),
                                   level2_gf_closed(c.m, c.order), &bad),
                  "first mismatch at q^", bad, " for ", module_name(c.m));
  }
}

TEST_CASE("closed characters of the pure modules expand positively") {
  for (Level2Module m : {Level2Module::kTwoL0, Level2Module::kTwoL1}) {
    const LatticeSeries ch = level2_char_closed(m, 10);
    CHECK(ch.coeff(LatticeMono{0, 0}) == 1);
    for (const auto& [mono, c] : ch.terms()) CHECK(c > 0);
  }
}

TEST_CASE("unspecialised character from enumerated partitions matches the closed form") {
  // Weight sums over the exact family for the mixed module, complete through
  // delta/2-order (8 - 2) / 2 = 3.
  const LatticeSeries from_paths = exact_family_char(1, 2, 8);
  CHECK(from_paths.order() == 3);
  const LatticeSeries closed = level2_char_closed(Level2Module::kL01, 3);
  CHECK(from_paths == closed);
}

TEST_CASE("verification reports pass on the identity grid") {
  CHECK(verify_main(0, 1, false, 14).pass);
  CHECK(verify_main(1, 2, true, 10).pass);
  CHECK(verify_meurman_primc(1, 2, 12).pass);
  CHECK(verify_andrews_gordon(2, 3, 16).pass);
  CHECK(verify_bressoud(1, 2, 14).pass);
  CHECK(verify_weyl_kac(1, 3, 20).pass);

  const VerifyReport rep = verify_main(0, 1, false, 14);
  CHECK(!rep.mismatch.has_value());
  CHECK(rep.order == 14);
  CHECK(rep.elapsed_ms >= 0);
}

TEST_CASE("character verification reports the floor shift") {
  const VerifyReport l01 = verify_character(Level2Module::kL01, 6);
  CHECK(l01.pass);
  CHECK(l01.floor_shift == 0);

  const VerifyReport two_l0 = verify_character(Level2Module::kTwoL0, 6);
  CHECK(two_l0.pass);
  CHECK(two_l0.floor_shift == 0);

  const VerifyReport two_l1 = verify_character(Level2Module::kTwoL1, 6);
  CHECK(two_l1.pass);
  CHECK(two_l1.floor_shift == 1);
}

/* Acceptance gate: end-to-end checks of the identities and bijections the
 * library exists to verify.  Prints exactly one PASS/FAIL line per criterion
 * on stdout (details of any failure go to stderr) and exits with the number
 * of failed criteria.
 */

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qaffine/characters.hpp"
#include "qaffine/classical.hpp"
#include "qaffine/coloured.hpp"
#include "qaffine/crystal.hpp"
#include "qaffine/qseries.hpp"
#include "test_util.hpp"

using namespace qaffine;

namespace {

std::string spot(int i, int n, int m) {
  std::ostringstream out;
  out << "i=" << i << " n=" << n << " m=" << m;
  return out.str();
}

/* 1. Exact-difference counts against the main infinite product. */
bool exact_counts_match_product(std::string& detail) {
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto buckets = exact_partitions(i, n, 25);
      const QSeries prod = product_side(ProductFamily::kMainExact, {i, n}, 25);
      for (int m = 0; m <= 25; ++m)
        if (prod.at(m) != static_cast<long>(buckets[m].size())) {
          detail = "first mismatch at " + spot(i, n, m);
          return false;
        }
    }
  return true;
}

/* 2. At-least-difference counts against the widened product. */
bool atleast_counts_match_product(std::string& detail) {
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto buckets = atleast_partitions(i, n, 18);
      const QSeries prod = product_side(ProductFamily::kMainAtLeast, {i, n}, 18);
      for (int m = 0; m <= 18; ++m)
        if (prod.at(m) != static_cast<long>(buckets[m].size())) {
          detail = "first mismatch at " + spot(i, n, m);
          return false;
        }
    }
  return true;
}

/* 3. Frequency-condition counts = exact counts = product. */
bool frequency_counts_match(std::string& detail) {
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto buckets = exact_partitions(i, n, 18);
      const QSeries prod = product_side(ProductFamily::kMainExact, {i, n}, 18);
      for (int m = 0; m <= 18; ++m) {
        const Int f = meurman_primc_count(i, n, m);
        if (f != static_cast<long>(buckets[m].size()) || f != prod.at(m)) {
          detail = "first mismatch at " + spot(i, n, m);
          return false;
        }
      }
    }
  return true;
}

/* 4. Gap-condition counts against the odd- and even-modulus products. */
bool gap_counts_match_products(std::string& detail) {
  for (int r = 2; r <= 4; ++r)
    for (int i = 1; i <= r; ++i) {
      const QSeries odd = product_side(ProductFamily::kAndrewsGordon, {i, r}, 25);
      const QSeries even = product_side(ProductFamily::kBressoud, {i, r}, 25);
      for (int m = 0; m <= 25; ++m) {
        if (andrews_gordon_count(i, r, m) != odd.at(m)) {
          detail = "odd-modulus mismatch at i=" + std::to_string(i) +
                   " r=" + std::to_string(r) + " m=" + std::to_string(m);
          return false;
        }
        if (bressoud_count(i, r, m) != even.at(m)) {
          detail = "even-modulus mismatch at i=" + std::to_string(i) +
                   " r=" + std::to_string(r) + " m=" + std::to_string(m);
          return false;
        }
      }
    }
  return true;
}

/* 5. Principally specialised characters against the main product. */
bool principal_character_matches(std::string& detail) {
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i <= n; ++i) {
      const QSeries wk = weyl_kac_principal(i, n, 30);
      const QSeries prod = product_side(ProductFamily::kMainExact, {i, n}, 30);
      const int bad = first_mismatch(wk, prod);
      if (bad != -1) {
        detail = "first mismatch at " + spot(i, n, bad);
        return false;
      }
    }
  return true;
}

bool path_round_trip(const CrystalPath& p, std::string& detail) {
  const ColouredPartition pi = path_to_partition(p);
  const CrystalPath back = partition_to_path(pi, p.i, p.n);
  if (back.i != p.i || back.n != p.n || back.prefix != p.prefix) {
    detail = "path round-trip failed at i=" + std::to_string(p.i) +
             " n=" + std::to_string(p.n) + " prefix length " +
             std::to_string(p.prefix.size());
    return false;
  }
  const AffineWeight direct = path_weight(p);
  const AffineWeight via =
      highest_weight(p.i, p.n) + partition_weight_monomial(pi, p.i, p.n).to_affine();
  if (direct != via) {
    detail = "weight correspondence failed at i=" + std::to_string(p.i) +
             " n=" + std::to_string(p.n);
    return false;
  }
  return true;
}

/* 6. Path <-> partition bijection: round trips, weight correspondence and
 * graded counts.  Deviating paths are generated directly as words
 * j_0..j_{L-1} (the alternating-colour coordinates), whose partition weight
 * is sum (k+1)|j_k - j_{k+1}| with j_L = i; pruning on that partial sum
 * makes the weight-bounded search exhaustive, since word length L can
 * contribute at most one zero-size part.
 */
bool path_bijection_holds(std::string& detail) {
  constexpr int kMaxWeight = 12;
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      for (const CrystalPath& p : enumerate_paths(i, n, 6))
        if (!path_round_trip(p, detail)) return false;

      std::map<long long, long long> graded;
      graded[0] = 1;  // the pure ground path
      std::vector<int> word;
      bool ok = true;
      const std::function<void(long long)> extend = [&](long long partial) {
        if (!ok) return;
        const int len = static_cast<int>(word.size());
        if (len >= 2 && len % 2 == 0 &&
            !(word[word.size() - 2] == i && word.back() == i)) {
          const long long w =
              partial + static_cast<long long>(len) * std::abs(word.back() - i);
          if (w <= kMaxWeight) {
            ++graded[w];
            CrystalPath p{i, n, {}};
            p.prefix.resize(word.size());
            for (size_t k = 0; k < word.size(); ++k)
              p.prefix[k] = (k % 2 == 0) ? word[k] : n - word[k];
            validate_path(p);
            if (partition_weight(path_to_partition(p)) != w) {
              detail = "graded weight disagreed at " + spot(i, n, static_cast<int>(w));
              ok = false;
              return;
            }
            if (!path_round_trip(p, detail)) {
              ok = false;
              return;
            }
          }
        }
        if (len >= 2 + kMaxWeight) return;  // one zero-size part at most
        for (int next = 0; next <= n; ++next) {
          const long long add =
              len == 0 ? 0 : static_cast<long long>(len) * std::abs(word.back() - next);
          if (partial + add > kMaxWeight) continue;
          word.push_back(next);
          extend(partial + add);
          word.pop_back();
        }
      };
      extend(0);
      if (!ok) return false;

      const auto buckets = exact_partitions(i, n, kMaxWeight);
      for (int m = 0; m <= kMaxWeight; ++m)
        if (graded[m] != static_cast<long long>(buckets[m].size())) {
          detail = "graded count mismatch at " + spot(i, n, m) + ": paths " +
                   std::to_string(graded[m]) + ", partitions " +
                   std::to_string(buckets[m].size());
          return false;
        }
    }
  return true;
}

/* 7. At-least = exact x plain split: round trips, weight additivity and the
 * counting corollary.
 */
bool split_bijection_holds(std::string& detail) {
  constexpr int kMaxWeight = 15;
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto atleast = atleast_partitions(i, n, kMaxWeight);
      const auto exact = exact_partitions(i, n, kMaxWeight);
      for (int m = 0; m <= kMaxWeight; ++m) {
        for (const ColouredPartition& pi : atleast[m]) {
          const SplitResult s = psi_split(pi, i, n);
          if (!is_exact_valid(s.mu, i, n)) {
            detail = "split gave an invalid exact component at " + spot(i, n, m);
            return false;
          }
          long long nu_weight = 0;
          for (size_t k = 0; k < s.nu.size(); ++k) {
            if (s.nu[k] < 1 || (k + 1 < s.nu.size() && s.nu[k] < s.nu[k + 1])) {
              detail = "split gave an invalid plain component at " + spot(i, n, m);
              return false;
            }
            nu_weight += s.nu[k];
          }
          if (partition_weight(s.mu) + nu_weight != partition_weight(pi)) {
            detail = "split weights not additive at " + spot(i, n, m);
            return false;
          }
          if (psi_merge(s, i, n) != pi) {
            detail = "split round-trip failed at " + spot(i, n, m);
            return false;
          }
        }
        Int convolved = 0;
        for (int k = 0; k <= m; ++k)
          convolved += count_partitions(k) * Int(static_cast<long>(exact[m - k].size()));
        if (convolved != static_cast<long>(atleast[m].size())) {
          detail = "counting corollary failed at " + spot(i, n, m);
          return false;
        }
      }
    }
  return true;
}

/* 8. Level-2 modules: enumerated generating functions match the closed
 * forms, the full character pipeline verifies, and the closed characters
 * of the pure modules have non-negative coefficients.
 */
bool level2_characters_verify(std::string& detail) {
  const struct {
    Level2Module m;
    int order;
  } cases[] = {{Level2Module::kL01, 10},
               {Level2Module::kTwoL0, 8},
               {Level2Module::kTwoL1, 8}};
  for (const auto& c : cases) {
    int bad = 0;
    if (!testing::cs_same(gf_from_enumeration(c.m, c.order),
                          level2_gf_closed(c.m, c.order), &bad)) {
      detail = "generating functions disagree at q^" + std::to_string(bad) +
               " for " + module_name(c.m);
      return false;
    }
    const VerifyReport rep = verify_character(c.m, c.order);
    if (!rep.pass) {
      detail = "character pipeline failed for " + module_name(c.m);
      if (rep.mismatch) detail += " at " + rep.mismatch->where;
      return false;
    }
  }
  for (Level2Module m : {Level2Module::kTwoL0, Level2Module::kTwoL1}) {
    const LatticeSeries ch = level2_char_closed(m, 12);
    for (const auto& [mono, coeff] : ch.terms())
      if (coeff < 0) {
        detail = "negative multiplicity in " + std::string(module_name(m)) +
                 " at a=" + std::to_string(mono.a) + " b=" + std::to_string(mono.b);
        return false;
      }
  }
  return true;
}

/* 9. Tail values computed from the energy cycle match the hand values that
 * make the two-part ground weight-neutral.
 */
bool ground_tail_values_match(std::string& detail) {
  EnergyTable table;
  table.e.assign(3, std::vector<int>(3));
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) table.e[x][y] = energy2_centred(2, x, y);
  if (ground_tail_values(table, {2, 0}) != std::vector<int>{-1, 1}) {
    detail = "tail for ground cycle (2,0)";
    return false;
  }
  if (ground_tail_values(table, {0, 2}) != std::vector<int>{1, -1}) {
    detail = "tail for ground cycle (0,2)";
    return false;
  }
  return true;
}

/* 10. Randomised kernel properties: multiplicative inverses, the two parity
 * extraction routes and the substitution morphism, 200 draws total.
 */
bool random_kernel_round_trips(std::string& detail) {
  std::mt19937 rng(20260819u);
  for (int t = 0; t < 50; ++t) {
    const QSeries a = testing::random_unit_qseries(rng, 12);
    if (!(qs_mul(a, qs_inv(a)) == QSeries::one(12))) {
      detail = "series inverse round-trip failed at draw " + std::to_string(t);
      return false;
    }
  }
  for (int t = 0; t < 50; ++t) {
    const ColouredSeries a = testing::random_unit_coloured(rng, 3, 8, 5);
    if (!testing::cs_same(cs_mul(a, cs_inv(a)), ColouredSeries::one(3, 8))) {
      detail = "coloured inverse round-trip failed at draw " + std::to_string(t);
      return false;
    }
  }
  for (int t = 0; t < 50; ++t) {
    const ColouredSeries s = testing::random_coloured(rng, 3, 8, 10);
    const std::vector<int> vars = (t % 2 == 0) ? std::vector<int>{0, 2}
                                               : std::vector<int>{1};
    if (!testing::cs_same(even_extract(s, vars), even_extract_halfsum(s, vars))) {
      detail = "parity extraction routes disagree at draw " + std::to_string(t);
      return false;
    }
  }
  const LatticeMono q_image{2, 1};
  const std::vector<LatticeMono> images = {{0, 1}, {0, -1}};
  for (int t = 0; t < 50; ++t) {
    const ColouredSeries a = testing::random_coloured(rng, 2, 6, 6);
    const ColouredSeries b = testing::random_coloured(rng, 2, 6, 6);
    const LatticeSeries lhs = substitute(cs_mul(a, b), q_image, images);
    const LatticeSeries rhs =
        ls_mul(substitute(a, q_image, images), substitute(b, q_image, images));
    if (!testing::ls_same(lhs, rhs)) {
      detail = "substitution is not multiplicative at draw " + std::to_string(t);
      return false;
    }
    if (!testing::ls_same(substitute(cs_add(a, b), q_image, images),
                          ls_add(substitute(a, q_image, images),
                                 substitute(b, q_image, images)))) {
      detail = "substitution is not additive at draw " + std::to_string(t);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    bool (*run)(std::string&);
  } criteria[] = {
      {"exact counts match the main product (0<=i<=n<=4, weight<=25)",
       exact_counts_match_product},
      {"at-least counts match the widened product (0<=i<=n<=3, weight<=18)",
       atleast_counts_match_product},
      {"frequency counts match exact counts and product (0<=i<=n<=3, weight<=18)",
       frequency_counts_match},
      {"gap-condition counts match both modulus products (r<=4, weight<=25)",
       gap_counts_match_products},
      {"principal specialisation matches the main product (0<=i<=n<=5, order 30)",
       principal_character_matches},
      {"path bijection round-trips with correct graded counts (weight<=12)",
       path_bijection_holds},
      {"at-least split round-trips with additive weights (weight<=15)",
       split_bijection_holds},
      {"level-2 generating functions and characters verify",
       level2_characters_verify},
      {"multi-ground tail values balance the energy cycle",
       ground_tail_values_match},
      {"randomised kernel round-trips all exact (200 draws)",
       random_kernel_round_trips},
  };

  int failures = 0;
  int k = 0;
  for (const auto& c : criteria) {
    ++k;
    bool ok = false;
    std::string detail;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << c.name
              << std::endl;
    if (!ok) {
      ++failures;
      if (!detail.empty())
        std::cerr << "  criterion " << k << " detail: " << detail << std::endl;
    }
  }
  return failures;
}

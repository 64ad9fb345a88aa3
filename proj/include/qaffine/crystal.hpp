#pragma once

#include <string>
#include <vector>

#include "qaffine/coloured.hpp"
#include "qaffine/integer.hpp"
#include "qaffine/lattice_series.hpp"

namespace qaffine {

/* Weight of the level-n affine weight lattice, stored as doubled integer
 * coordinates over (Lambda_0, Lambda_1, delta/2) so that half-integral
 * multiples stay exact: the weight is
 *   (two_l0 * Lambda_0 + two_l1 * Lambda_1 + two_d * delta/2) / 2.
 */
struct AffineWeight {
  long long two_l0 = 0;
  long long two_l1 = 0;
  long long two_d = 0;
  auto operator<=>(const AffineWeight&) const = default;

  AffineWeight operator+(const AffineWeight& o) const {
    return {two_l0 + o.two_l0, two_l1 + o.two_l1, two_d + o.two_d};
  }
  AffineWeight operator-(const AffineWeight& o) const {
    return {two_l0 - o.two_l0, two_l1 - o.two_l1, two_d - o.two_d};
  }
  AffineWeight scaled(long long k) const { return {k * two_l0, k * two_l1, k * two_d}; }

  /* As a monomial (e^{-delta/2})^a (e^{alpha_1})^b; defined only for weights
   * in the span of alpha_1 and delta (Lambda components cancel).
   */
  LatticeMono to_lattice_mono() const;

  std::string to_string() const;
};

/* wt b_j = (2j - n) Lambda_0 + (n - 2j) Lambda_1 for the level-n row. */
AffineWeight crystal_weight(int n, int j);

/* Highest weight Lambda_{i,n} = i Lambda_0 + (n-i) Lambda_1. */
AffineWeight highest_weight(int i, int n);

/* Doubled energy 2*H_n(b_x tensor b_y) = 2*max(x, n-y) of the level-n
 * tensor square, column convention: x is the first tensor factor.
 */
int energy2(int n, int x, int y);

/* Doubled centred energy 2*H(b_x tensor b_y) = 2*max(x - n/2, n/2 - y);
 * the centred table makes each ground-state two-cycle sum to zero.
 */
int energy2_centred(int n, int x, int y);

/* The ground-state path of Lambda_{i,n} alternates (b_i, b_{n-i}); period
 * 1 when i = n-i, else 2.
 */
std::vector<int> ground_state_cycle(int i, int n);

/* A path deviating from the ground-state path of Lambda_{i,n} in a prefix
 * of even length: p_k = b_{prefix[k]} for k < len, ground beyond.  A
 * non-empty prefix must genuinely deviate at its last pair.
 */
struct CrystalPath {
  int i = 0;
  int n = 0;
  std::vector<int> prefix;
};

void validate_path(const CrystalPath& p);

/* Weight of the path computed two independent ways -- the defining energy
 * sum and the alternating-colour closed form -- asserted equal, then
 * returned (as wta p, so highest_weight(i,n) + deviation).
 */
AffineWeight path_weight(const CrystalPath& p);

/* Bijection: path -> exact-family partition grounded at colour i. */
ColouredPartition path_to_partition(const CrystalPath& p);

/* Inverse bijection: exact-family partition -> path. */
CrystalPath partition_to_path(const ColouredPartition& pi, int i, int n);

/* Weight monomial of an exact partition: the pair
 *   (alternating colour sum A, -|pi|)
 * over the basis ((alpha_1 - alpha_0)/2, delta/2); equals
 * path_weight(partition_to_path(pi)) - Lambda.
 */
struct GroundedWeight {
  long long alpha_step = 0;   // coefficient of (alpha_1 - alpha_0)/2
  long long delta_half = 0;   // coefficient of delta/2 (equals -|pi|)

  AffineWeight to_affine() const;
  LatticeMono to_lattice_mono() const;
};

GroundedWeight partition_weight_monomial(const ColouredPartition& pi, int i, int n);

/* All deviating prefixes of even length <= max_len (minimality enforced). */
std::vector<CrystalPath> enumerate_paths(int i, int n, int max_len);

}  // namespace qaffine

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qaffine/classical.hpp"
#include "qaffine/coloured.hpp"
#include "qaffine/crystal.hpp"
#include "qaffine/lattice_series.hpp"
#include "qaffine/qseries.hpp"

namespace qaffine {

/* The three level-2 standard modules, named by their highest weight:
 * L01 = Lambda_0 + Lambda_1, 2L0 = 2 Lambda_0, 2L1 = 2 Lambda_1.
 */
enum class Level2Module { kL01, kTwoL0, kTwoL1 };

std::string module_name(Level2Module m);
std::optional<Level2Module> module_from_name(std::string_view name);

/* Principally specialised numerator-over-denominator character product
 *   prod_{k>=1} (1-q^{(n+2)k-(n-i+1)})(1-q^{(n+2)k-(i+1)})(1-q^{(n+2)k})
 *             / ((1-q^{2k-1})^2 (1-q^{2k})),
 * truncated at trunc_order.
 */
QSeries weyl_kac_principal(int i, int n, int trunc_order);

/* Closed character e^{-lambda} ch L(lambda) over the doubled weight lattice
 * (Q = e^{-delta/2}, X = e^{alpha_1}), truncated at delta/2-order
 * trunc_order.  For 2L0 and 2L1 this is the half-sum of the two signed
 * triple products, which makes the coefficients manifestly non-negative.
 */
LatticeSeries level2_char_closed(Level2Module m, int trunc_order);

/* Closed coloured generating function of the module's grounded partitions
 * (colour variables c_0, c_1, c_2), with even-degree extraction applied for
 * 2L0/2L1.  The raw 2L1 product carries a q^{-1} factor, so the returned
 * series may have q_min = -1 (that slice is zero after extraction).
 */
ColouredSeries level2_gf_closed(Level2Module m, int trunc_order);

/* Enumeration family behind each module: energy table, ground tail,
 * difference step and parts-count parity.
 */
GroundedFamily level2_family(Level2Module m);

/* Same generating function obtained by direct enumeration of the grounded
 * partitions up to the truncation weight.
 */
ColouredSeries gf_from_enumeration(Level2Module m, int trunc_order);

/* e^{-lambda} ch of the level-n module with highest weight
 * i Lambda_0 + (n-i) Lambda_1, summed over the exact-family partitions of
 * weight <= max_weight.  Complete through delta/2-order (max_weight - n)/2,
 * the returned truncation order.
 */
LatticeSeries exact_family_char(int i, int n, int max_weight);

/* ---------------- verification reports ---------------- */

struct MismatchInfo {
  std::string where;  // rendered exponent/monomial plus which pair disagreed
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string identity;
  int order = 0;
  bool pass = false;
  std::optional<MismatchInfo> mismatch;
  // How far the stored floor of the substituted character sits below its
  // first nonzero term (character pipeline only; 1 for 2L1, else 0).
  int floor_shift = 0;
  long long elapsed_ms = 0;
};

/* Exact coloured counts (enumerated) vs the infinite product vs the
 * specialised character product, through q^trunc_order.
 */
VerifyReport verify_main(int i, int n, bool at_least, int trunc_order);

/* Frequency-condition counts vs the same product. */
VerifyReport verify_meurman_primc(int i, int n, int trunc_order);

/* Gap-condition counts vs the odd/even-modulus products. */
VerifyReport verify_andrews_gordon(int i, int r, int trunc_order);
VerifyReport verify_bressoud(int i, int r, int trunc_order);

/* Specialised character product vs the main-identity product. */
VerifyReport verify_weyl_kac(int i, int n, int trunc_order);

/* Full level-2 pipeline: enumerated generating function vs closed form,
 * then the substituted generating function times (q^d;q^d)_inf against the
 * closed lattice character.
 */
VerifyReport verify_character(Level2Module m, int trunc_order);

}  // namespace qaffine

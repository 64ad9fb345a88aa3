#pragma once

#include <vector>

#include "qaffine/qseries.hpp"

namespace qaffine {

/* Number of unrestricted integer partitions of m (p(0) = 1). */
Int count_partitions(int m);

/* Partitions of m with lambda_j - lambda_{j+r-1} >= 2 for every window and
 * at most i-1 parts equal to 1 (Andrews-Gordon side).  Requires
 * 1 <= i <= r and r >= 2.
 */
Int andrews_gordon_count(int i, int r, int m);

/* Same gap condition plus the even-window parity rule: whenever
 * lambda_j <= lambda_{j+r-2} + 1 the sum lambda_j + ... + lambda_{j+r-2}
 * must be congruent to i-1 mod 2 (Bressoud side).  Requires
 * 1 <= i <= r and r >= 2.
 */
Int bressoud_count(int i, int r, int m);

/* Two-colour frequency count: partitions of m into plain parts k >= 1 and
 * underlined odd parts, where for every k >= 1 the frequency windows
 *   f(2k+1) + f(2k) + f(2k-1)            <= n
 *   f(2k)   + fu(2k-1) + f(2k-1)         <= n
 *   fu(2k+1) + f(2k+1) + f(2k)           <= n
 *   fu(2k+1) + f(2k)   + fu(2k-1)        <= n
 * hold (fu = underlined frequency, identically zero on even parts), with the
 * boundary bounds fu(1) <= i and f(1) <= n-i.  Requires 0 <= i <= n.
 */
Int meurman_primc_count(int i, int n, int m);

enum class ProductFamily {
  kAndrewsGordon,   // (q^{2r+1}, q^i, q^{2r-i+1}; q^{2r+1})_inf / (q;q)_inf
  kBressoud,        // (q^{2r},   q^i, q^{2r-i};   q^{2r})_inf   / (q;q)_inf
  kMainExact,       // (q^{i+1}, q^{n-i+1}, q^{n+2}; q^{n+2})_inf / ((q;q^2)_inf (q;q)_inf)
  kMainAtLeast,     // kMainExact with one extra factor 1/(q;q)_inf
};

struct ProductParams {
  int i = 0;
  // second parameter: r for the first two families, n for the main ones
  int rn = 0;
};

/* Infinite-product side of the selected identity, truncated at trunc_order. */
QSeries product_side(ProductFamily family, const ProductParams& params, int trunc_order);

}  // namespace qaffine

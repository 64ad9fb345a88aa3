#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaffine/coloured_series.hpp"
#include "qaffine/integer.hpp"

namespace qaffine {

/* One part of a coloured partition: a size (possibly negative for grounded
 * families with negative tail entries) and a colour index.
 */
struct ColouredPart {
  int size = 0;
  int colour = 0;
  auto operator<=>(const ColouredPart&) const = default;
};

/* A coloured partition listed from largest part to the ground/tail.  The
 * trailing ground part(s) are stored explicitly.
 */
using ColouredPartition = std::vector<ColouredPart>;

long long partition_weight(const ColouredPartition& p);

std::string partition_to_string(const ColouredPartition& p);

/* --- Absolute-difference families over colours c_0..c_n, ground c_i. ---
 *
 * Exact family: consecutive sizes differ by exactly |colour difference|,
 * the last part is 0_{c_i}, and the part directly above the ground has a
 * colour different from c_i.
 *
 * At-least family: consecutive sizes differ by at least |colour difference|
 * and the part directly above the ground differs from 0_{c_i} as a part.
 *
 * Enumerators return all partitions of each weight 0..max_weight (bucketed
 * by weight); counts are the bucket sizes.
 */
std::vector<std::vector<ColouredPartition>> exact_partitions(int i, int n, int max_weight);
std::vector<std::vector<ColouredPartition>> atleast_partitions(int i, int n, int max_weight);
Int count_exact(int i, int n, int m);
Int count_atleast(int i, int n, int m);

/* In the exact family the sizes are the suffix sums of the colour jumps;
 * rebuilds a partition from its colour word and ground colour.
 */
ColouredPartition exact_from_colours(const std::vector<int>& colours, int i);

/* Membership checks for the two families (ground included in p). */
bool is_exact_valid(const ColouredPartition& p, int i, int n);
bool is_atleast_valid(const ColouredPartition& p, int i, int n);

/* Generating function sum over weight buckets: sum of C(p) q^{|p|} where
 * C multiplies one colour variable per part (ground/tail included).
 */
ColouredSeries coloured_gf(const std::map<int, std::vector<ColouredPartition>>& buckets,
                           int nvars, int trunc_order);

/* --- Energy-grounded families. ---
 *
 * The relation between a part (k, c_a) directly above (l, c_b) is
 *   k - l - E(b_b tensor b_a)  in  d * Z_{>=0}
 * where E is an integer energy table (row = first tensor factor).
 */
struct EnergyTable {
  // e[x][y] = E(b_x tensor b_y)
  std::vector<std::vector<int>> e;
  int ncolours() const { return static_cast<int>(e.size()); }
  int at(int x, int y) const { return e.at(static_cast<size_t>(x)).at(static_cast<size_t>(y)); }
};

struct GroundSpec {
  // Fixed trailing parts (u^{(0)}, ..., u^{(t-1)}) in partition order; for a
  // single ground this is {(0, c_g)}.  Tail sizes must sum to zero.
  std::vector<ColouredPart> tail;
};

struct GroundedFamily {
  EnergyTable table;
  GroundSpec ground;
  int d = 1;               // difference divisibility step
  bool parts_multiple_of_tail = false;  // keep only partitions with t | #parts
};

/* All grounded partitions with weight between min_weight and max_weight,
 * bucketed by weight (bucket w - min_weight holds weight w).  Weights below
 * zero only occur when the tail has negative entries.  Throws
 * std::runtime_error if the family admits a zero-weight pump (an infinite
 * family at bounded weight).
 */
std::map<int, std::vector<ColouredPartition>> grounded_partitions(
    const GroundedFamily& family, int max_weight);

/* Tail values that make a multi-ground cycle weight-neutral:
 *   u^{(k)} = -(1/t) sum_{l<t} (l+1) E(g_{l+1}, g_l) + sum_{l>=k} E(g_{l+1}, g_l)
 * with g_t = g_0; E must make the first sum divisible by t.
 */
std::vector<int> ground_tail_values(const EnergyTable& table, const std::vector<int>& grounds);

/* --- Split of an at-least partition into (exact partition, plain partition).
 *
 * r is the largest position whose predecessor's colour differs from the
 * ground colour; the exact component keeps the first r colours with the
 * minimal admissible sizes, and the leftover differences form the plain
 * partition.  weight(pi) = weight(mu) + weight(nu).
 */
struct SplitResult {
  ColouredPartition mu;       // exact-family component, ground included
  std::vector<int> nu;        // plain partition, weakly decreasing, no zeros
};

SplitResult psi_split(const ColouredPartition& pi, int i, int n);

/* Inverse of psi_split; rejects shapes that no split can produce. */
ColouredPartition psi_merge(const SplitResult& parts, int i, int n);

}  // namespace qaffine

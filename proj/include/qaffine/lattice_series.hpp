#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaffine/coloured_series.hpp"
#include "qaffine/integer.hpp"

namespace qaffine {

/* Exponent pair of a weight-lattice monomial (e^{-delta/2})^a (e^{alpha_1})^b.
 * The doubled basis keeps half-integer delta multiples integral: a counts
 * halves of delta.
 */
struct LatticeMono {
  int a = 0;  // exponent of e^{-delta/2}
  int b = 0;  // exponent of e^{alpha_1}
  auto operator<=>(const LatticeMono&) const = default;
};

/* Truncated series over the doubled weight lattice: finitely many terms for
 * each a, truncated at a <= order, with a >= a_min (a_min <= 0 occurs only
 * transiently for raw products carrying an e^{+delta/2} factor).
 */
class LatticeSeries {
 public:
  LatticeSeries(int trunc_order, int a_min = 0);
  static LatticeSeries one(int trunc_order, int a_min = 0);

  int order() const { return order_; }
  int a_min() const { return a_min_; }

  void add_term(const LatticeMono& m, const Int& c);
  Int coeff(const LatticeMono& m) const;

  bool operator==(const LatticeSeries& o) const;

  LatticeSeries truncated(int new_order) const;

  // Exact division of every coefficient by d; throws on inexactness.
  LatticeSeries divided_by(const Int& d) const;

  // Lowest a with a nonzero term, or order+1 when empty.
  int lowest_a() const;

  const std::map<LatticeMono, Int>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  int order_;
  int a_min_;
  std::map<LatticeMono, Int> terms_;
};

LatticeSeries ls_add(const LatticeSeries& a, const LatticeSeries& b);
LatticeSeries ls_sub(const LatticeSeries& a, const LatticeSeries& b);

/* Truncated product; the result order shrinks by the partner's negative
 * a_min exactly as for coloured series.
 */
LatticeSeries ls_mul(const LatticeSeries& a, const LatticeSeries& b);

/* Truncation of $\prod_{k \ge 0} (1 - c\, g\, s^k)$ where g and s are lattice
 * monomials, s.a >= 1 (each successive factor sits strictly deeper in the
 * delta direction) and at most the k = 0 factor may have g.a <= 0.
 */
LatticeSeries lattice_poch(int trunc_order, const Int& c, LatticeMono g, LatticeMono s);

/* Ring morphism from coloured series: q and every colour variable are sent
 * to lattice monomials.  Every colour variable that actually occurs must
 * have an assignment.  The reliable truncation order of the image is
 * computed from the q-image's a-component (which must be >= 1).
 */
LatticeSeries substitute(const ColouredSeries& g, const LatticeMono& q_image,
                         const std::vector<LatticeMono>& colour_images);

}  // namespace qaffine

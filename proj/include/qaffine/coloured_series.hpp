#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaffine/laurent.hpp"
#include "qaffine/qseries.hpp"

namespace qaffine {

/* Truncated series in q whose coefficients are Laurent polynomials in a
 * fixed set of colour variables c_0 .. c_{v-1}.
 *
 * Stored q-exponents lie in [q_min, order]; q_min <= 0 and is only ever
 * negative for products that contain an explicit q^{-1} factor.  As with
 * QSeries, all retained coefficients are exact; exponents above the order
 * are unknown.
 */
class ColouredSeries {
 public:
  ColouredSeries(int nvars, int trunc_order, int q_min = 0);
  static ColouredSeries one(int nvars, int trunc_order, int q_min = 0);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int q_min() const { return q_min_; }

  // Coefficient of q^e (zero polynomial if no stored term).
  LaurentPoly coeff(int e) const;
  void add_term(int e, const std::vector<int>& colour_exps, const Int& c);
  void add_poly(int e, const LaurentPoly& p);

  bool operator==(const ColouredSeries& o) const;

  // Reduce the truncation order (keeps q_min).
  ColouredSeries truncated(int new_order) const;

  // Multiply every term by q^shift (adjusts both q_min and order).
  ColouredSeries shifted(int shift) const;

  const std::map<int, LaurentPoly>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  int nvars_;
  int order_;
  int q_min_;
  std::map<int, LaurentPoly> terms_;  // q-exponent -> coefficient polynomial
  friend ColouredSeries cs_mul(const ColouredSeries&, const ColouredSeries&);
};

ColouredSeries cs_add(const ColouredSeries& a, const ColouredSeries& b);
ColouredSeries cs_sub(const ColouredSeries& a, const ColouredSeries& b);

/* Truncated Cauchy product.  q_min adds; the result order is
 *   min(a.order + min(b.q_min,0), b.order + min(a.q_min,0))
 * so that every retained coefficient is complete.
 */
ColouredSeries cs_mul(const ColouredSeries& a, const ColouredSeries& b);

/* Inverse of a series whose lowest-order coefficient is a unit monomial
 * (single colour monomial with coefficient +-1).  The result has
 * q_min = -e0 and order a.order - 2*e0 where e0 is that lowest exponent;
 * for the usual e0 = 0 case the order is unchanged.
 */
ColouredSeries cs_inv(const ColouredSeries& a);

/* Truncation of $\prod_{k \ge 0} (1 - \text{pre} \cdot q^{s + dk})$ where
 * `pre` is a signed colour monomial.  s may be negative or zero; only
 * factors with exponent <= order are multiplied, and factors with negative
 * exponents lower q_min accordingly.  Requires d >= 1 and s + d >= 1
 * (otherwise two or more factors would sit at non-positive exponents and the
 * product would not converge coefficientwise).
 */
ColouredSeries poch(int nvars, int trunc_order, const LaurentMono& pre, int s, int d);

/* Even-exponent extraction over a subset of colour variables: keeps the
 * terms whose total colour exponent over `vars` is even.  An empty subset
 * keeps everything.
 */
ColouredSeries even_extract(const ColouredSeries& g, const std::vector<int>& vars);

/* Same extraction computed the long way round, as (g(c) + g(-c))/2 with the
 * listed variables negated.  Must agree with even_extract everywhere; kept
 * as an independent implementation precisely so tests can cross-check.
 */
ColouredSeries even_extract_halfsum(const ColouredSeries& g, const std::vector<int>& vars);

/* Specialise all colour variables to 1, giving a plain QSeries.  Requires
 * q_min >= 0.
 */
QSeries cs_to_qseries(const ColouredSeries& g);

}  // namespace qaffine

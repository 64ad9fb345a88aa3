#pragma once

#include <stdexcept>
#include <vector>

#include "qaffine/integer.hpp"

namespace qaffine {

/* Truncated formal power series in q with exact integer coefficients.
 *
 * A QSeries of order N stores the coefficients of q^0 .. q^N; every operation
 * keeps all retained coefficients exactly equal to those of the untruncated
 * series.  Coefficients of exponents > N are unknown, never "zero".
 */
class QSeries {
 public:
  explicit QSeries(int trunc_order);
  static QSeries one(int trunc_order);
  static QSeries monomial(int trunc_order, int exponent, const Int& coeff);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Int& at(int exponent) const;
  void set(int exponent, const Int& value);

  bool operator==(const QSeries& o) const { return c_ == o.c_; }

  std::vector<Int>& coeffs() { return c_; }
  const std::vector<Int>& coeffs() const { return c_; }

 private:
  std::vector<Int> c_;  // c_[e] is the coefficient of q^e, 0 <= e <= order
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);

/* Multiplicative inverse.  Requires a unit constant term (+1 or -1); the
 * remaining coefficients follow from the convolution recurrence
 *   $b_m = -a_0 \sum_{k=1}^{m} a_k b_{m-k}$.
 */
QSeries qs_inv(const QSeries& a);

/* Truncation of $\prod_{k \ge 0} (1 - c\,q^{s + dk})$, keeping only factors
 * whose exponent is <= the truncation order.  Requires s >= 1 (a factor at
 * q^0 would not be a power series unit times 1 + O(q)) and d >= 1.
 */
QSeries poch_q(int trunc_order, const Int& c, int s, int d);

/* First mismatching exponent of two equal-order series, or -1 if equal. */
int first_mismatch(const QSeries& a, const QSeries& b);

}  // namespace qaffine

#include "qaffine/qseries.hpp"

namespace qaffine {

QSeries::QSeries(int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("QSeries: negative truncation order");
  c_.assign(static_cast<size_t>(trunc_order) + 1, Int(0));
}

QSeries QSeries::one(int trunc_order) {
  QSeries s(trunc_order);
  s.c_[0] = 1;
  return s;
}

QSeries QSeries::monomial(int trunc_order, int exponent, const Int& coeff) {
  QSeries s(trunc_order);
  s.set(exponent, coeff);
  return s;
}

const Int& QSeries::at(int exponent) const {
  if (exponent < 0 || exponent > order())
    throw std::invalid_argument("QSeries: exponent outside stored range");
  return c_[static_cast<size_t>(exponent)];
}

void QSeries::set(int exponent, const Int& value) {
  if (exponent < 0 || exponent > order())
    throw std::invalid_argument("QSeries: exponent outside stored range");
  c_[static_cast<size_t>(exponent)] = value;
}

static void require_equal_orders(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("QSeries: mismatched truncation orders");
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  require_equal_orders(a, b);
  QSeries r(a.order());
  for (int e = 0; e <= a.order(); ++e) r.coeffs()[e] = a.at(e) + b.at(e);
  return r;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
  require_equal_orders(a, b);
  QSeries r(a.order());
  for (int e = 0; e <= a.order(); ++e) r.coeffs()[e] = a.at(e) - b.at(e);
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  require_equal_orders(a, b);
  const int n = a.order();
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.at(j) == 0) continue;
      r.coeffs()[i + j] += a.at(i) * b.at(j);
    }
  }
  return r;
}

QSeries qs_inv(const QSeries& a) {
  const Int& a0 = a.at(0);
  if (a0 != 1 && a0 != -1)
    throw std::domain_error("QSeries: inverse requires a unit constant term");
  const int n = a.order();
  QSeries b(n);
  b.coeffs()[0] = a0;  // 1/1 = 1, 1/-1 = -1
  for (int m = 1; m <= n; ++m) {
    Int acc(0);
    for (int k = 1; k <= m; ++k) acc += a.at(k) * b.at(m - k);
    b.coeffs()[m] = -a0 * acc;  // a0^{-1} == a0 for units
  }
  return b;
}

QSeries poch_q(int trunc_order, const Int& c, int s, int d) {
  if (s < 1) throw std::invalid_argument("poch_q: shift must be >= 1");
  if (d < 1) throw std::invalid_argument("poch_q: step must be >= 1");
  QSeries r = QSeries::one(trunc_order);
  for (long long e = s; e <= trunc_order; e += d) {
    // multiply in place by (1 - c q^e)
    for (int m = trunc_order; m >= static_cast<int>(e); --m) {
      r.coeffs()[m] -= c * r.at(m - static_cast<int>(e));
    }
  }
  return r;
}

int first_mismatch(const QSeries& a, const QSeries& b) {
  require_equal_orders(a, b);
  for (int e = 0; e <= a.order(); ++e)
    if (a.at(e) != b.at(e)) return e;
  return -1;
}

}  // namespace qaffine

#include "qaffine/coloured_series.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

ColouredSeries::ColouredSeries(int nvars, int trunc_order, int q_min)
    : nvars_(nvars), order_(trunc_order), q_min_(q_min) {
  if (nvars < 0) throw std::invalid_argument("ColouredSeries: negative variable count");
  if (q_min > 0) throw std::invalid_argument("ColouredSeries: q_min must be <= 0");
  if (trunc_order < q_min)
    throw std::invalid_argument("ColouredSeries: truncation order below q_min");
}

ColouredSeries ColouredSeries::one(int nvars, int trunc_order, int q_min) {
  ColouredSeries s(nvars, trunc_order, q_min);
  s.add_term(0, std::vector<int>(static_cast<size_t>(nvars), 0), Int(1));
  return s;
}

LaurentPoly ColouredSeries::coeff(int e) const {
  if (e < q_min_ || e > order_)
    throw std::invalid_argument("ColouredSeries: exponent outside stored range");
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly(nvars_) : it->second;
}

void ColouredSeries::add_term(int e, const std::vector<int>& colour_exps, const Int& c) {
  LaurentPoly p(nvars_);
  p.add_term(colour_exps, c);
  add_poly(e, p);
}

void ColouredSeries::add_poly(int e, const LaurentPoly& p) {
  if (e < q_min_ || e > order_)
    throw std::invalid_argument("ColouredSeries: exponent outside stored range");
  if (p.nvars() != nvars_)
    throw std::invalid_argument("ColouredSeries: coefficient arity mismatch");
  if (p.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ColouredSeries::operator==(const ColouredSeries& o) const {
  return nvars_ == o.nvars_ && order_ == o.order_ && q_min_ == o.q_min_ &&
         terms_ == o.terms_;
}

ColouredSeries ColouredSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("ColouredSeries: cannot extend truncation order");
  ColouredSeries r(nvars_, new_order, q_min_);
  for (const auto& [e, p] : terms_) {
    if (e <= new_order) r.terms_.emplace(e, p);
  }
  return r;
}

ColouredSeries ColouredSeries::shifted(int shift) const {
  ColouredSeries r(nvars_, order_ + shift, std::min(q_min_ + shift, 0));
  for (const auto& [e, p] : terms_) r.terms_.emplace(e + shift, p);
  return r;
}

static void require_compatible(const ColouredSeries& a, const ColouredSeries& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("ColouredSeries: mixed variable counts");
  if (a.order() != b.order())
    throw std::invalid_argument("ColouredSeries: mismatched truncation orders");
}

ColouredSeries cs_add(const ColouredSeries& a, const ColouredSeries& b) {
  require_compatible(a, b);
  ColouredSeries r(a.nvars(), a.order(), std::min(a.q_min(), b.q_min()));
  for (const auto& [e, p] : a.terms()) r.add_poly(e, p);
  for (const auto& [e, p] : b.terms()) r.add_poly(e, p);
  return r;
}

ColouredSeries cs_sub(const ColouredSeries& a, const ColouredSeries& b) {
  require_compatible(a, b);
  ColouredSeries r(a.nvars(), a.order(), std::min(a.q_min(), b.q_min()));
  for (const auto& [e, p] : a.terms()) r.add_poly(e, p);
  for (const auto& [e, p] : b.terms()) r.add_poly(e, -p);
  return r;
}

ColouredSeries cs_mul(const ColouredSeries& a, const ColouredSeries& b) {
  require_compatible(a, b);
  const int order = std::min(a.order() + std::min(b.q_min(), 0),
                             b.order() + std::min(a.q_min(), 0));
  ColouredSeries r(a.nvars(), order, a.q_min() + b.q_min());
  for (const auto& [ea, pa] : a.terms()) {
    for (const auto& [eb, pb] : b.terms()) {
      const int e = ea + eb;
      if (e > order) continue;
      r.add_poly(e, pa * pb);
    }
  }
  return r;
}

ColouredSeries cs_inv(const ColouredSeries& a) {
  // Find the lowest nonzero exponent.
  if (a.terms().empty())
    throw std::domain_error("ColouredSeries: cannot invert the zero series");
  const int e0 = a.terms().begin()->first;
  const LaurentPoly& lead = a.terms().begin()->second;
  if (!lead.is_unit_monomial())
    throw std::domain_error(
        "ColouredSeries: inverse requires a unit monomial lowest coefficient");
  const LaurentPoly lead_inv = lead.inverse();

  // Solve (a * b)(q^m) = [m == 0] degree by degree:
  //   b_{m} = lead^{-1} ( [m == -... ] - sum_{k > e0} a_k b_{m + e0 - k} )
  // writing b's exponents from -e0 upward.
  const int out_order = a.order() - 2 * e0;
  ColouredSeries b(a.nvars(), out_order, std::min(-e0, 0));
  for (int m = -e0; m <= out_order; ++m) {
    // target coefficient of q^{e0 + m} in a*b is [e0 + m == 0]
    LaurentPoly acc(a.nvars());
    if (e0 + m == 0) acc = LaurentPoly::constant(a.nvars(), Int(1));
    for (const auto& [k, ak] : a.terms()) {
      if (k == e0) continue;
      const int be = e0 + m - k;  // exponent of b multiplying a_k
      if (be < -e0 || be >= m) continue;
      auto it = b.terms().find(be);
      if (it == b.terms().end()) continue;
      acc = acc - ak * it->second;
    }
    b.add_poly(m, lead_inv * acc);
  }
  return b;
}

ColouredSeries poch(int nvars, int trunc_order, const LaurentMono& pre, int s, int d) {
  if (d < 1) throw std::invalid_argument("poch: step must be >= 1");
  if (s + d < 1)
    throw std::invalid_argument("poch: at most one factor may sit at exponent <= 0");
  if (static_cast<int>(pre.exps.size()) != nvars)
    throw std::invalid_argument("poch: prefactor arity mismatch");
  const int q_min = std::min(s, 0);
  ColouredSeries r = ColouredSeries::one(nvars, trunc_order, q_min);
  const LaurentPoly m = LaurentPoly::monomial(pre);
  for (long long e = s; e <= trunc_order; e += d) {
    // multiply in place by (1 - pre * q^e); iterate downward so each old
    // coefficient is consumed before being overwritten
    std::vector<std::pair<int, LaurentPoly>> updates;
    for (const auto& [k, p] : r.terms()) {
      const long long ke = k + e;
      if (ke > trunc_order || ke < q_min) continue;
      updates.emplace_back(static_cast<int>(ke), -(m * p));
    }
    for (const auto& [k, p] : updates) r.add_poly(k, p);
  }
  return r;
}

ColouredSeries even_extract(const ColouredSeries& g, const std::vector<int>& vars) {
  ColouredSeries r(g.nvars(), g.order(), g.q_min());
  for (const auto& [e, p] : g.terms()) r.add_poly(e, p.even_part(vars));
  return r;
}

ColouredSeries even_extract_halfsum(const ColouredSeries& g, const std::vector<int>& vars) {
  ColouredSeries r(g.nvars(), g.order(), g.q_min());
  for (const auto& [e, p] : g.terms()) {
    const LaurentPoly sum = p + p.negate_vars(vars);
    r.add_poly(e, sum.divided_by(Int(2)));
  }
  return r;
}

std::string ColouredSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, p] : terms_) {
    if (p.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool paren = p.terms().size() > 1;
    if (paren) out << "(";
    out << p.to_string();
    if (paren) out << ")";
    if (e != 0) {
      out << "*q";
      if (e != 1) out << "^" << e;
    }
  }
  if (first) return "0";
  return out.str();
}

QSeries cs_to_qseries(const ColouredSeries& g) {
  if (g.q_min() < 0)
    throw std::invalid_argument("cs_to_qseries: series has negative exponents");
  QSeries r(g.order());
  for (const auto& [e, p] : g.terms()) {
    Int total(0);
    for (const auto& [ex, c] : p.terms()) total += c;
    r.coeffs()[e] = total;
  }
  return r;
}

}  // namespace qaffine

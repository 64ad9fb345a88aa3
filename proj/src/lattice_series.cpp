#include "qaffine/lattice_series.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

LatticeSeries::LatticeSeries(int trunc_order, int a_min)
    : order_(trunc_order), a_min_(a_min) {
  if (a_min > 0) throw std::invalid_argument("LatticeSeries: a_min must be <= 0");
  if (trunc_order < a_min)
    throw std::invalid_argument("LatticeSeries: truncation order below a_min");
}

LatticeSeries LatticeSeries::one(int trunc_order, int a_min) {
  LatticeSeries s(trunc_order, a_min);
  s.add_term(LatticeMono{0, 0}, Int(1));
  return s;
}

void LatticeSeries::add_term(const LatticeMono& m, const Int& c) {
  if (m.a < a_min_ || m.a > order_)
    throw std::invalid_argument("LatticeSeries: exponent outside stored range");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LatticeSeries::coeff(const LatticeMono& m) const {
  if (m.a < a_min_ || m.a > order_)
    throw std::invalid_argument("LatticeSeries: exponent outside stored range");
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LatticeSeries::operator==(const LatticeSeries& o) const {
  return order_ == o.order_ && a_min_ == o.a_min_ && terms_ == o.terms_;
}

LatticeSeries LatticeSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("LatticeSeries: cannot extend truncation order");
  LatticeSeries r(new_order, a_min_);
  for (const auto& [m, c] : terms_) {
    if (m.a <= new_order) r.terms_.emplace(m, c);
  }
  return r;
}

LatticeSeries LatticeSeries::divided_by(const Int& d) const {
  if (d == 0) throw std::domain_error("LatticeSeries: division by zero");
  LatticeSeries r(order_, a_min_);
  for (const auto& [m, c] : terms_) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (rem != 0) throw std::domain_error("LatticeSeries: inexact integer division");
    r.terms_.emplace(m, q);
  }
  return r;
}

int LatticeSeries::lowest_a() const {
  int best = order_ + 1;
  for (const auto& [m, c] : terms_) best = std::min(best, m.a);
  return best;
}

LatticeSeries ls_add(const LatticeSeries& a, const LatticeSeries& b) {
  const int order = std::min(a.order(), b.order());
  LatticeSeries r(order, std::min(a.a_min(), b.a_min()));
  for (const auto& [m, c] : a.terms())
    if (m.a <= order) r.add_term(m, c);
  for (const auto& [m, c] : b.terms())
    if (m.a <= order) r.add_term(m, c);
  return r;
}

LatticeSeries ls_sub(const LatticeSeries& a, const LatticeSeries& b) {
  const int order = std::min(a.order(), b.order());
  LatticeSeries r(order, std::min(a.a_min(), b.a_min()));
  for (const auto& [m, c] : a.terms())
    if (m.a <= order) r.add_term(m, c);
  for (const auto& [m, c] : b.terms())
    if (m.a <= order) r.add_term(m, -c);
  return r;
}

LatticeSeries ls_mul(const LatticeSeries& a, const LatticeSeries& b) {
  const int order = std::min(a.order() + std::min(b.a_min(), 0),
                             b.order() + std::min(a.a_min(), 0));
  LatticeSeries r(order, a.a_min() + b.a_min());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const LatticeMono m{ma.a + mb.a, ma.b + mb.b};
      if (m.a > order) continue;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

LatticeSeries lattice_poch(int trunc_order, const Int& c, LatticeMono g, LatticeMono s) {
  if (s.a < 1)
    throw std::invalid_argument("lattice_poch: step must descend in the delta direction");
  // a_min is the sum of the negative factor exponents; with s.a >= 1 only
  // finitely many factors sit below zero.
  long long a_min = 0;
  for (long long k = 0;; ++k) {
    const long long fa = g.a + k * s.a;
    if (fa >= 0) break;
    a_min += fa;
  }
  LatticeSeries r = LatticeSeries::one(trunc_order, static_cast<int>(a_min));
  for (long long k = 0;; ++k) {
    const long long fa = g.a + k * s.a;
    const long long fb = g.b + k * s.b;
    if (fa > trunc_order) break;
    std::vector<std::pair<LatticeMono, Int>> updates;
    for (const auto& [m, cm] : r.terms()) {
      const long long na = m.a + fa;
      const long long nb = m.b + fb;
      if (na > trunc_order) continue;
      if (na < a_min)
        throw std::logic_error("lattice_poch: exponent fell below the computed floor");
      updates.push_back({LatticeMono{static_cast<int>(na), static_cast<int>(nb)}, -(c * cm)});
    }
    for (const auto& [m, cm] : updates) r.add_term(m, cm);
  }
  return r;
}

LatticeSeries substitute(const ColouredSeries& g, const LatticeMono& q_image,
                         const std::vector<LatticeMono>& colour_images) {
  if (q_image.a < 1)
    throw std::invalid_argument(
        "substitute: the q image must descend in the delta direction");
  if (static_cast<int>(colour_images.size()) != g.nvars())
    throw std::invalid_argument("substitute: missing assignment for a colour variable");
  for (const auto& ci : colour_images) {
    if (ci.a != 0)
      throw std::invalid_argument(
          "substitute: colour images must be delta-free, otherwise truncation "
          "would be unsound");
  }
  // Terms beyond g.order() would land at a >= (order+1) * q_image.a, so the
  // image is complete through that bound minus one.
  const int out_order = (g.order() + 1) * q_image.a - 1;
  const int out_min = g.q_min() * q_image.a;
  LatticeSeries r(out_order, std::min(out_min, 0));
  for (const auto& [e, p] : g.terms()) {
    for (const auto& [exps, coeff] : p.terms()) {
      long long a = static_cast<long long>(e) * q_image.a;
      long long b = static_cast<long long>(e) * q_image.b;
      for (size_t v = 0; v < exps.size(); ++v) {
        a += static_cast<long long>(exps[v]) * colour_images[v].a;
        b += static_cast<long long>(exps[v]) * colour_images[v].b;
      }
      r.add_term(LatticeMono{static_cast<int>(a), static_cast<int>(b)}, coeff);
    }
  }
  return r;
}

std::string LatticeSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool bare = (m.a == 0 && m.b == 0);
    if (a != 1 && a != -1) {
      out << a.get_str();
      if (!bare) out << "*";
    } else if (a == -1) {
      out << "-";
    }
    if (bare) {
      if (a == 1 || a == -1) out << "1";
    } else {
      bool need_star = false;
      if (m.a != 0) {
        out << "Q";
        if (m.a != 1) out << "^" << m.a;
        need_star = true;
      }
      if (m.b != 0) {
        if (need_star) out << "*";
        out << "X";
        if (m.b != 1) out << "^" << m.b;
      }
    }
  }
  return out.str();
}

}  // namespace qaffine

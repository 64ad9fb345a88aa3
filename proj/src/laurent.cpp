#include "qaffine/laurent.hpp"

#include <sstream>

namespace qaffine {

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
  LaurentPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const LaurentMono& m) {
  LaurentPoly p(static_cast<int>(m.exps.size()));
  p.add_term(m.exps, m.coeff);
  return p;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void LaurentPoly::add_term(const std::vector<int>& exps, const Int& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly: exponent vector has wrong arity");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_arity(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("LaurentPoly: mixed variable counts");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_arity(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  require_same_arity(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_arity(*this, o);
  LaurentPoly r(nvars_);
  std::vector<int> e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) e[static_cast<size_t>(v)] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit_monomial())
    throw std::domain_error("LaurentPoly: inverse requires a unit monomial");
  const auto& [e, c] = *terms_.begin();
  std::vector<int> ne(e.size());
  for (size_t v = 0; v < e.size(); ++v) ne[v] = -e[v];
  LaurentPoly r(nvars_);
  r.add_term(ne, c);  // c in {1,-1} is its own inverse
  return r;
}

LaurentPoly LaurentPoly::divided_by(const Int& d) const {
  if (d == 0) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (rem != 0) throw std::domain_error("LaurentPoly: inexact integer division");
    r.terms_.emplace(e, q);
  }
  return r;
}

LaurentPoly LaurentPoly::even_part(const std::vector<int>& vars) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    long long total = 0;
    for (int v : vars) {
      if (v < 0 || v >= nvars_)
        throw std::invalid_argument("LaurentPoly: variable index out of range");
      total += e[static_cast<size_t>(v)];
    }
    if (((total % 2) + 2) % 2 == 0) r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::negate_vars(const std::vector<int>& vars) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    long long total = 0;
    for (int v : vars) {
      if (v < 0 || v >= nvars_)
        throw std::invalid_argument("LaurentPoly: variable index out of range");
      total += e[static_cast<size_t>(v)];
    }
    r.terms_.emplace(e, (((total % 2) + 2) % 2 == 0) ? c : -c);
  }
  return r;
}

std::string LaurentPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool all_zero = true;
    for (int x : e) all_zero = all_zero && x == 0;
    if (a != 1 && a != -1) {
      out << a.get_str();
      if (!all_zero) out << "*";
    } else if (a == -1) {
      out << "-";
    }
    if (all_zero) {
      if (a == 1 || a == -1) out << "1";
    } else {
      bool firstv = true;
      for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!firstv) out << "*";
        firstv = false;
        out << var_prefix << v;
        if (e[v] != 1) out << "^" << e[v];
      }
    }
  }
  return out.str();
}

}  // namespace qaffine

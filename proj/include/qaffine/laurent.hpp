#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/integer.hpp"

namespace qaffine {

/* One monomial c_0^{e_0} ... c_{v-1}^{e_{v-1}} with an integer coefficient.
 * Exponents may be negative (Laurent).
 */
struct LaurentMono {
  std::vector<int> exps;
  Int coeff{1};
};

/* Sparse Laurent polynomial in a fixed number of variables.  Terms are kept
 * in lexicographic order of the exponent vector and zero coefficients are
 * never stored, so equal polynomials have identical representations.
 */
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
  }
  static LaurentPoly constant(int nvars, const Int& c);
  static LaurentPoly monomial(const LaurentMono& m);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  // True iff the polynomial is a single monomial with coefficient +1 or -1.
  bool is_unit_monomial() const;

  void add_term(const std::vector<int>& exps, const Int& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Multiplicative inverse, defined only for unit monomials.
  LaurentPoly inverse() const;

  // Exact division by an integer; throws if any coefficient is not divisible.
  LaurentPoly divided_by(const Int& d) const;

  // Keeps only terms whose total exponent over `vars` is even.
  LaurentPoly even_part(const std::vector<int>& vars) const;

  // Negates the listed variables: c_v -> -c_v for v in vars.
  LaurentPoly negate_vars(const std::vector<int>& vars) const;

  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  std::string to_string(const std::string& var_prefix = "c") const;

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;  // exponent vector -> coefficient
};

}  // namespace qaffine

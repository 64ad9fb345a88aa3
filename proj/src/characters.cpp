#include "qaffine/characters.hpp"

#include <chrono>
#include <sstream>
#include <tuple>

namespace qaffine {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

LaurentMono cmono(const Int& coeff, int e0, int e1, int e2) {
  return LaurentMono{{e0, e1, e2}, coeff};
}

std::string mono_label(const LatticeMono& m) {
  std::ostringstream out;
  out << "Q^" << m.a << "*X^" << m.b;
  return out.str();
}

/* Coefficientwise comparison over the shared reliable range; exponents
 * outside a side's stored window are zero by construction.
 */
std::optional<MismatchInfo> first_cs_mismatch(const ColouredSeries& x, const ColouredSeries& y,
                                              const std::string& label) {
  const int lo = std::min(x.q_min(), y.q_min());
  const int hi = std::min(x.order(), y.order());
  const LaurentPoly zero(x.nvars());
  for (int e = lo; e <= hi; ++e) {
    const LaurentPoly a = (e >= x.q_min()) ? x.coeff(e) : zero;
    const LaurentPoly b = (e >= y.q_min()) ? y.coeff(e) : zero;
    if (!(a == b)) {
      std::ostringstream where;
      where << "q^" << e << " (" << label << ")";
      return MismatchInfo{where.str(), a.to_string(), b.to_string()};
    }
  }
  return std::nullopt;
}

std::optional<MismatchInfo> first_ls_mismatch(const LatticeSeries& x, const LatticeSeries& y,
                                              const std::string& label) {
  const int hi = std::min(x.order(), y.order());
  std::map<LatticeMono, std::pair<Int, Int>> merged;
  for (const auto& [m, c] : x.terms())
    if (m.a <= hi) merged[m].first = c;
  for (const auto& [m, c] : y.terms())
    if (m.a <= hi) merged[m].second = c;
  for (const auto& [m, cc] : merged) {
    if (cc.first != cc.second)
      return MismatchInfo{mono_label(m) + " (" + label + ")", cc.first.get_str(),
                          cc.second.get_str()};
  }
  return std::nullopt;
}

std::optional<MismatchInfo> first_qs_mismatch(const QSeries& x, const QSeries& y,
                                              const std::string& label) {
  const int e = first_mismatch(x, y);
  if (e < 0) return std::nullopt;
  std::ostringstream where;
  where << "q^" << e << " (" << label << ")";
  return MismatchInfo{where.str(), x.at(e).get_str(), y.at(e).get_str()};
}

}  // namespace

std::string module_name(Level2Module m) {
  switch (m) {
    case Level2Module::kL01:
      return "L01";
    case Level2Module::kTwoL0:
      return "2L0";
    case Level2Module::kTwoL1:
      return "2L1";
  }
  return "?";
}

std::optional<Level2Module> module_from_name(std::string_view name) {
  if (name == "L01" || name == "l01") return Level2Module::kL01;
  if (name == "2L0" || name == "2l0") return Level2Module::kTwoL0;
  if (name == "2L1" || name == "2l1") return Level2Module::kTwoL1;
  return std::nullopt;
}

QSeries weyl_kac_principal(int i, int n, int trunc_order) {
  if (i < 0 || n < 0 || i > n)
    throw std::invalid_argument("weyl_kac_principal: requires 0 <= i <= n");
  if (trunc_order < 0) throw std::invalid_argument("weyl_kac_principal: negative order");
  QSeries r = poch_q(trunc_order, Int(1), i + 1, n + 2);
  r = qs_mul(r, poch_q(trunc_order, Int(1), n - i + 1, n + 2));
  r = qs_mul(r, poch_q(trunc_order, Int(1), n + 2, n + 2));
  const QSeries odd_inv = qs_inv(poch_q(trunc_order, Int(1), 1, 2));
  r = qs_mul(r, odd_inv);
  r = qs_mul(r, odd_inv);
  r = qs_mul(r, qs_inv(poch_q(trunc_order, Int(1), 2, 2)));
  return r;
}

LatticeSeries level2_char_closed(Level2Module m, int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("level2_char_closed: negative order");
  const int N = trunc_order + 1;  // headroom for the e^{+delta/2} factor
  const LatticeMono step{2, 0};   // e^{-delta}
  if (m == Level2Module::kL01) {
    // (-e^{-alpha_0}, -e^{-alpha_1}, -e^{-delta}; e^{-delta})
    LatticeSeries r = lattice_poch(N, Int(-1), LatticeMono{2, 1}, step);
    r = ls_mul(r, lattice_poch(N, Int(-1), LatticeMono{0, -1}, step));
    r = ls_mul(r, lattice_poch(N, Int(-1), LatticeMono{2, 0}, step));
    return r.truncated(trunc_order);
  }
  const LatticeMono f1 = (m == Level2Module::kTwoL0) ? LatticeMono{1, 1} : LatticeMono{3, 1};
  const LatticeMono f2 = (m == Level2Module::kTwoL0) ? LatticeMono{1, -1} : LatticeMono{-1, -1};
  const LatticeMono f3{1, 0};
  auto triple = [&](const Int& sign) {
    LatticeSeries r = lattice_poch(N, sign, f1, step);
    r = ls_mul(r, lattice_poch(N, sign, f2, step));
    r = ls_mul(r, lattice_poch(N, sign, f3, step));
    return r;
  };
  LatticeSeries half = ls_add(triple(Int(-1)), triple(Int(1))).divided_by(Int(2));
  return half.truncated(std::min(trunc_order, half.order()));
}

ColouredSeries level2_gf_closed(Level2Module m, int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("level2_gf_closed: negative order");
  const int V = 3;
  const int N = trunc_order + 1;  // headroom for the q^{-1} factor and prefactor
  ColouredSeries g = ColouredSeries::one(V, N);
  if (m == Level2Module::kL01) {
    // c_1 (-c_0 q;q)(-c_2;q) / ((c_1 q;q)(c_0 c_2 q;q^2))
    g = poch(V, N, cmono(Int(-1), 1, 0, 0), 1, 1);
    g = cs_mul(g, poch(V, N, cmono(Int(-1), 0, 0, 1), 0, 1));
    g = cs_mul(g, cs_inv(poch(V, N, cmono(Int(1), 0, 1, 0), 1, 1)));
    g = cs_mul(g, cs_inv(poch(V, N, cmono(Int(1), 1, 0, 1), 1, 2)));
    ColouredSeries pre(V, N);
    pre.add_term(0, {0, 1, 0}, Int(1));
    return cs_mul(pre, g).truncated(trunc_order);
  }
  // c_0 c_2 (-c_0 q^a; q^2)(-c_2 q^b; q^2) / ((c_1 q;q^2)(c_0 c_2 q^4;q^4)),
  // with (a, b) = (1, 1) for 2L0 and (3, -1) for 2L1, then even extraction.
  const int a = (m == Level2Module::kTwoL0) ? 1 : 3;
  const int b = (m == Level2Module::kTwoL0) ? 1 : -1;
  g = poch(V, N, cmono(Int(-1), 1, 0, 0), a, 2);
  g = cs_mul(g, cs_inv(poch(V, N, cmono(Int(1), 0, 1, 0), 1, 2)));
  g = cs_mul(g, cs_inv(poch(V, N, cmono(Int(1), 1, 0, 1), 4, 4)));
  ColouredSeries pre(V, N);
  pre.add_term(0, {1, 0, 1}, Int(1));
  g = cs_mul(pre, g);
  // The b-side factor carries q^{-1} for 2L1, which costs one order in the
  // product; multiplying it last spends the headroom exactly once.
  g = cs_mul(g, poch(V, N, cmono(Int(-1), 0, 0, 1), b, 2));
  g = even_extract(g, {0, 1, 2});
  return g.truncated(std::min(trunc_order, g.order()));
}

GroundedFamily level2_family(Level2Module m) {
  GroundedFamily fam;
  const int C = 3;
  fam.table.e.assign(static_cast<size_t>(C), std::vector<int>(static_cast<size_t>(C), 0));
  const bool doubled = (m != Level2Module::kL01);
  for (int x = 0; x < C; ++x)
    for (int y = 0; y < C; ++y) {
      const int e2 = energy2_centred(2, x, y);
      fam.table.e[static_cast<size_t>(x)][static_cast<size_t>(y)] = doubled ? e2 : e2 / 2;
    }
  std::vector<int> grounds;
  switch (m) {
    case Level2Module::kL01:
      grounds = {1};
      fam.d = 1;
      break;
    case Level2Module::kTwoL0:
      grounds = {2, 0};
      fam.d = 2;
      break;
    case Level2Module::kTwoL1:
      grounds = {0, 2};
      fam.d = 2;
      break;
  }
  const std::vector<int> u = ground_tail_values(fam.table, grounds);
  for (size_t k = 0; k < grounds.size(); ++k)
    fam.ground.tail.push_back({u[k], grounds[k]});
  fam.parts_multiple_of_tail = true;
  return fam;
}

ColouredSeries gf_from_enumeration(Level2Module m, int trunc_order) {
  if (trunc_order < 0) throw std::invalid_argument("gf_from_enumeration: negative order");
  const GroundedFamily fam = level2_family(m);
  const auto buckets = grounded_partitions(fam, trunc_order);
  return coloured_gf(buckets, 3, trunc_order);
}

LatticeSeries exact_family_char(int i, int n, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("exact_family_char: negative weight bound");
  const int ord = std::max(0, (max_weight - n) / 2);
  LatticeSeries ch(ord, 0);
  const auto buckets = exact_partitions(i, n, max_weight);
  for (const auto& bucket : buckets) {
    for (const auto& p : bucket) {
      const LatticeMono mono = partition_weight_monomial(p, i, n).to_lattice_mono();
      if (mono.a <= ord) ch.add_term(mono, Int(1));
    }
  }
  return ch;
}

VerifyReport verify_main(int i, int n, bool at_least, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  {
    std::ostringstream id;
    id << (at_least ? "main-atleast" : "main-exact") << "(i=" << i << ",n=" << n << ")";
    rep.identity = id.str();
  }
  rep.order = trunc_order;
  const auto buckets = at_least ? atleast_partitions(i, n, trunc_order)
                                : exact_partitions(i, n, trunc_order);
  QSeries counts(trunc_order);
  for (int e = 0; e <= trunc_order; ++e)
    counts.set(e, Int(buckets[static_cast<size_t>(e)].size()));
  const QSeries prod = product_side(
      at_least ? ProductFamily::kMainAtLeast : ProductFamily::kMainExact,
      ProductParams{i, n}, trunc_order);
  QSeries wk = weyl_kac_principal(i, n, trunc_order);
  if (at_least) wk = qs_mul(wk, qs_inv(poch_q(trunc_order, Int(1), 1, 1)));
  rep.mismatch = first_qs_mismatch(counts, prod, "counts vs product");
  if (!rep.mismatch) rep.mismatch = first_qs_mismatch(counts, wk, "counts vs specialised character");
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerifyReport verify_meurman_primc(int i, int n, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  {
    std::ostringstream id;
    id << "meurman-primc(i=" << i << ",n=" << n << ")";
    rep.identity = id.str();
  }
  rep.order = trunc_order;
  QSeries counts(trunc_order);
  for (int e = 0; e <= trunc_order; ++e) counts.set(e, meurman_primc_count(i, n, e));
  const QSeries prod =
      product_side(ProductFamily::kMainExact, ProductParams{i, n}, trunc_order);
  rep.mismatch = first_qs_mismatch(counts, prod, "counts vs product");
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerifyReport verify_andrews_gordon(int i, int r, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  {
    std::ostringstream id;
    id << "andrews-gordon(i=" << i << ",r=" << r << ")";
    rep.identity = id.str();
  }
  rep.order = trunc_order;
  QSeries counts(trunc_order);
  for (int e = 0; e <= trunc_order; ++e) counts.set(e, andrews_gordon_count(i, r, e));
  const QSeries prod =
      product_side(ProductFamily::kAndrewsGordon, ProductParams{i, r}, trunc_order);
  rep.mismatch = first_qs_mismatch(counts, prod, "counts vs product");
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerifyReport verify_bressoud(int i, int r, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  {
    std::ostringstream id;
    id << "bressoud(i=" << i << ",r=" << r << ")";
    rep.identity = id.str();
  }
  rep.order = trunc_order;
  QSeries counts(trunc_order);
  for (int e = 0; e <= trunc_order; ++e) counts.set(e, bressoud_count(i, r, e));
  const QSeries prod =
      product_side(ProductFamily::kBressoud, ProductParams{i, r}, trunc_order);
  rep.mismatch = first_qs_mismatch(counts, prod, "counts vs product");
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerifyReport verify_weyl_kac(int i, int n, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  {
    std::ostringstream id;
    id << "weyl-kac(i=" << i << ",n=" << n << ")";
    rep.identity = id.str();
  }
  rep.order = trunc_order;
  const QSeries wk = weyl_kac_principal(i, n, trunc_order);
  const QSeries prod =
      product_side(ProductFamily::kMainExact, ProductParams{i, n}, trunc_order);
  rep.mismatch = first_qs_mismatch(wk, prod, "specialised character vs product");
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerifyReport verify_character(Level2Module m, int trunc_order) {
  const auto start = Clock::now();
  VerifyReport rep;
  rep.identity = "character " + module_name(m);
  rep.order = trunc_order;

  const ColouredSeries enumerated = gf_from_enumeration(m, trunc_order);
  const ColouredSeries closed_gf = level2_gf_closed(m, trunc_order);
  rep.mismatch = first_cs_mismatch(enumerated, closed_gf, "enumerated vs closed product");

  if (!rep.mismatch) {
    const LatticeMono q_image =
        (m == Level2Module::kL01) ? LatticeMono{2, 0} : LatticeMono{1, 0};
    const std::vector<LatticeMono> colour_images{
        LatticeMono{0, 1}, LatticeMono{0, 0}, LatticeMono{0, -1}};
    // Substituting the closed form keeps its stored floor, so the report can
    // say how far that floor sits below the first nonzero term.
    const LatticeSeries image = substitute(closed_gf, q_image, colour_images);
    // (q^d; q^d)_inf always maps to prod (1 - e^{-delta k}) here: d = 1 with
    // q = e^{-delta} for L01, d = 2 with q = e^{-delta/2} otherwise.
    const LatticeSeries euler =
        lattice_poch(image.order() + 1, Int(1), LatticeMono{2, 0}, LatticeMono{2, 0});
    const LatticeSeries lhs = ls_mul(image, euler);
    rep.floor_shift = lhs.lowest_a() - lhs.a_min();
    const LatticeSeries rhs = level2_char_closed(m, lhs.order());
    rep.mismatch = first_ls_mismatch(lhs, rhs, "substituted vs closed character");
  }
  rep.pass = !rep.mismatch;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace qaffine

#include "qaffine/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qaffine {

LatticeMono AffineWeight::to_lattice_mono() const {
  if (two_l0 + two_l1 != 0)
    throw std::domain_error("AffineWeight: not in the alpha_1/delta span");
  if (two_l1 % 4 != 0 || two_d % 2 != 0)
    throw std::domain_error("AffineWeight: not a lattice monomial exponent");
  // w = (two_l1/4) alpha_1 + (two_d/2) delta/2
  return LatticeMono{static_cast<int>(-two_d / 2), static_cast<int>(two_l1 / 4)};
}

std::string AffineWeight::to_string() const {
  std::ostringstream out;
  auto halves = [](long long v) {
    std::ostringstream o;
    if (v % 2 == 0)
      o << v / 2;
    else
      o << v << "/2";
    return o.str();
  };
  out << halves(two_l0) << "*L0 + " << halves(two_l1) << "*L1 + " << halves(two_d)
      << "*d/2";
  return out.str();
}

AffineWeight crystal_weight(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("crystal_weight: requires 0 <= j <= n");
  return {2LL * (2 * j - n), 2LL * (n - 2 * j), 0};
}

AffineWeight highest_weight(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("highest_weight: requires 0 <= i <= n");
  return {2LL * i, 2LL * (n - i), 0};
}

int energy2(int n, int x, int y) {
  if (x < 0 || x > n || y < 0 || y > n)
    throw std::invalid_argument("energy2: indices outside the crystal row");
  return 2 * std::max(x, n - y);
}

int energy2_centred(int n, int x, int y) {
  if (x < 0 || x > n || y < 0 || y > n)
    throw std::invalid_argument("energy2_centred: indices outside the crystal row");
  return std::max(2 * x - n, n - 2 * y);
}

std::vector<int> ground_state_cycle(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("ground_state_cycle: requires 0 <= i <= n");
  if (2 * i == n) return {i};
  return {i, n - i};
}

void validate_path(const CrystalPath& p) {
  if (p.n < 0 || p.i < 0 || p.i > p.n)
    throw std::invalid_argument("CrystalPath: requires 0 <= i <= n");
  if (p.prefix.size() % 2 != 0)
    throw std::invalid_argument("CrystalPath: the deviating prefix must have even length");
  for (int v : p.prefix)
    if (v < 0 || v > p.n)
      throw std::invalid_argument("CrystalPath: prefix entry outside the crystal row");
  const size_t L = p.prefix.size();
  if (L >= 2 && p.prefix[L - 2] == p.i && p.prefix[L - 1] == p.n - p.i)
    throw std::invalid_argument("CrystalPath: prefix must deviate at its last pair");
}

/* Path entry at position k (prefix, then the ground-state alternation). */
static int path_at(const CrystalPath& p, int k) {
  if (k < static_cast<int>(p.prefix.size())) return p.prefix[static_cast<size_t>(k)];
  return (k % 2 == 0) ? p.i : p.n - p.i;
}

/* Relabelled colour word of the path: even positions keep the entry, odd
 * positions reflect it through n.
 */
static std::vector<int> colour_word(const CrystalPath& p) {
  std::vector<int> j(p.prefix.size());
  for (size_t k = 0; k < p.prefix.size(); ++k)
    j[k] = (k % 2 == 0) ? p.prefix[k] : p.n - p.prefix[k];
  return j;
}

AffineWeight path_weight(const CrystalPath& p) {
  validate_path(p);
  const int n = p.n;
  const int i = p.i;
  const int L = static_cast<int>(p.prefix.size());
  const std::vector<int> g = ground_state_cycle(i, n);
  const int t = static_cast<int>(g.size());

  // Defining route: highest weight, plus the prefix weights, plus the
  // delta-direction energy corrections
  //   (L/t) * delta * sum_{k<t}(k+1) H(g_{k+1} (x) g_k)
  //   - delta * sum_{k<L}(k+1) H(p_{k+1} (x) p_k)
  // computed in doubled units throughout.
  AffineWeight w = highest_weight(i, n);
  for (int k = 0; k < L; ++k) w = w + crystal_weight(n, path_at(p, k));
  long long s2_ground = 0;
  for (int k = 0; k < t; ++k)
    s2_ground += static_cast<long long>(k + 1) *
                 energy2_centred(n, g[static_cast<size_t>((k + 1) % t)], g[static_cast<size_t>(k)]);
  long long s2_path = 0;
  for (int k = 0; k < L; ++k)
    s2_path += static_cast<long long>(k + 1) *
               energy2_centred(n, path_at(p, k + 1), path_at(p, k));
  if (t > 0 && L % t == 0) {
    w.two_d += 2 * (static_cast<long long>(L) / t) * s2_ground;
  } else {
    throw std::logic_error("path_weight: prefix length is not a whole number of periods");
  }
  w.two_d -= 2 * s2_path;

  // Closed route: alternating colour sum and total partition weight.
  const std::vector<int> j = colour_word(p);
  long long alt = 0;
  for (int k = 0; k < L; ++k)
    alt += ((k % 2 == 0) ? -1LL : 1LL) * j[static_cast<size_t>(k)];
  long long wsum = 0;
  for (int k = 0; k < L; ++k) {
    const int jk = j[static_cast<size_t>(k)];
    const int jk1 = (k + 1 < L) ? j[static_cast<size_t>(k + 1)] : i;
    wsum += static_cast<long long>(k + 1) * std::abs(jk - jk1);
  }
  AffineWeight closed = highest_weight(i, n);
  closed.two_l0 += -4 * alt;
  closed.two_l1 += 4 * alt;
  closed.two_d += -2 * alt - 2 * wsum;

  if (!(w == closed))
    throw std::logic_error("path_weight: energy route and closed route disagree");
  return w;
}

ColouredPartition path_to_partition(const CrystalPath& p) {
  validate_path(p);
  const int L = static_cast<int>(p.prefix.size());
  const std::vector<int> j = colour_word(p);
  ColouredPartition out;
  int drop = (L >= 1 && j[static_cast<size_t>(L - 1)] == p.i) ? 1 : 0;
  out.reserve(static_cast<size_t>(L - drop) + 1);
  // suffix sums of the colour jumps, with the ground colour appended
  std::vector<int> sizes(static_cast<size_t>(L));
  int acc = 0;
  for (int k = L - 1; k >= 0; --k) {
    const int next = (k + 1 < L) ? j[static_cast<size_t>(k + 1)] : p.i;
    acc += std::abs(j[static_cast<size_t>(k)] - next);
    sizes[static_cast<size_t>(k)] = acc;
  }
  for (int k = 0; k < L - drop; ++k)
    out.push_back({sizes[static_cast<size_t>(k)], j[static_cast<size_t>(k)]});
  out.push_back({0, p.i});
  return out;
}

CrystalPath partition_to_path(const ColouredPartition& pi, int i, int n) {
  if (!is_exact_valid(pi, i, n))
    throw std::invalid_argument("partition_to_path: not a valid exact-family partition");
  const int sp = static_cast<int>(pi.size()) - 1;  // non-ground part count
  CrystalPath p{i, n, {}};
  if (sp == 0) return p;
  const int m = (sp + 1) / 2;  // ceil(sp / 2)
  p.prefix.resize(static_cast<size_t>(2 * m));
  auto colour_at = [&](int k) {
    return (k <= sp - 1) ? pi[static_cast<size_t>(k)].colour : i;
  };
  for (int k = 0; k < m; ++k) {
    p.prefix[static_cast<size_t>(2 * k)] = colour_at(2 * k);
    p.prefix[static_cast<size_t>(2 * k + 1)] = n - colour_at(2 * k + 1);
  }
  validate_path(p);
  return p;
}

AffineWeight GroundedWeight::to_affine() const {
  return {-4 * alpha_step, 4 * alpha_step, -2 * alpha_step + 2 * delta_half};
}

LatticeMono GroundedWeight::to_lattice_mono() const {
  return LatticeMono{static_cast<int>(alpha_step - delta_half),
                     static_cast<int>(alpha_step)};
}

GroundedWeight partition_weight_monomial(const ColouredPartition& pi, int i, int n) {
  if (!is_exact_valid(pi, i, n))
    throw std::invalid_argument("partition_weight_monomial: not a valid exact partition");
  const int sp = static_cast<int>(pi.size()) - 1;
  GroundedWeight w;
  // alternating colour sum over the non-ground parts, with the ground colour
  // completing the last pair when the count is odd
  for (int k = 0; k < sp; ++k)
    w.alpha_step += ((k % 2 == 0) ? -1LL : 1LL) * pi[static_cast<size_t>(k)].colour;
  if (sp % 2 == 1) w.alpha_step += i;
  w.delta_half = -partition_weight(pi);
  return w;
}

std::vector<CrystalPath> enumerate_paths(int i, int n, int max_len) {
  if (i < 0 || n < 0 || i > n)
    throw std::invalid_argument("enumerate_paths: requires 0 <= i <= n");
  std::vector<CrystalPath> out;
  out.push_back(CrystalPath{i, n, {}});
  std::vector<int> prefix;
  for (int L = 2; L <= max_len; L += 2) {
    prefix.assign(static_cast<size_t>(L), 0);
    while (true) {
      if (!(prefix[static_cast<size_t>(L - 2)] == i &&
            prefix[static_cast<size_t>(L - 1)] == n - i))
        out.push_back(CrystalPath{i, n, prefix});
      // odometer increment over {0..n}^L
      int pos = L - 1;
      while (pos >= 0 && prefix[static_cast<size_t>(pos)] == n) {
        prefix[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++prefix[static_cast<size_t>(pos)];
    }
  }
  return out;
}

}  // namespace qaffine

#include "qaffine/coloured.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qaffine {

long long partition_weight(const ColouredPartition& p) {
  long long w = 0;
  for (const auto& part : p) w += part.size;
  return w;
}

std::string partition_to_string(const ColouredPartition& p) {
  std::ostringstream out;
  out << "(";
  for (size_t k = 0; k < p.size(); ++k) {
    if (k) out << ", ";
    out << p[k].size << "_c" << p[k].colour;
  }
  out << ")";
  return out.str();
}

static void require_in(int i, int n, const char* who) {
  if (n < 0 || i < 0 || i > n)
    throw std::invalid_argument(std::string(who) + ": requires 0 <= i <= n");
}

/* DFS over colour words, smallest part first.  In the exact family the new
 * part's size is forced, so every added part costs at least 1 and the
 * search terminates at the weight bound.
 */
std::vector<std::vector<ColouredPartition>> exact_partitions(int i, int n, int max_weight) {
  require_in(i, n, "exact_partitions");
  if (max_weight < 0) throw std::invalid_argument("exact_partitions: negative weight bound");
  std::vector<std::vector<ColouredPartition>> buckets(static_cast<size_t>(max_weight) + 1);
  // reversed[k] holds the parts from the ground upward
  std::vector<ColouredPart> reversed{{0, i}};
  const auto emit = [&](long long w) {
    ColouredPartition p(reversed.rbegin(), reversed.rend());
    buckets[static_cast<size_t>(w)].push_back(std::move(p));
  };
  std::function<void(long long)> rec = [&](long long w) {
    emit(w);
    const ColouredPart top = reversed.back();  // by value: push_back reallocates
    for (int u = 0; u <= n; ++u) {
      if (reversed.size() == 1 && u == i) continue;  // colour above ground differs
      const int size = top.size + std::abs(u - top.colour);
      if (w + size > max_weight) continue;
      reversed.push_back({size, u});
      rec(w + size);
      reversed.pop_back();
    }
  };
  rec(0);
  return buckets;
}

std::vector<std::vector<ColouredPartition>> atleast_partitions(int i, int n, int max_weight) {
  require_in(i, n, "atleast_partitions");
  if (max_weight < 0) throw std::invalid_argument("atleast_partitions: negative weight bound");
  std::vector<std::vector<ColouredPartition>> buckets(static_cast<size_t>(max_weight) + 1);
  std::vector<ColouredPart> reversed{{0, i}};
  const auto emit = [&](long long w) {
    ColouredPartition p(reversed.rbegin(), reversed.rend());
    buckets[static_cast<size_t>(w)].push_back(std::move(p));
  };
  std::function<void(long long)> rec = [&](long long w) {
    emit(w);
    const ColouredPart top = reversed.back();  // by value: push_back reallocates
    for (int u = 0; u <= n; ++u) {
      const int min_size = top.size + std::abs(u - top.colour);
      for (int size = std::max(min_size, reversed.size() == 1 ? 1 : min_size);
           w + size <= max_weight; ++size) {
        // the part directly above the ground must differ from the ground part;
        // size >= 1 there already guarantees it
        reversed.push_back({size, u});
        rec(w + size);
        reversed.pop_back();
      }
    }
  };
  rec(0);
  return buckets;
}

Int count_exact(int i, int n, int m) {
  if (m < 0) throw std::invalid_argument("count_exact: negative weight");
  return Int(exact_partitions(i, n, m)[static_cast<size_t>(m)].size());
}

Int count_atleast(int i, int n, int m) {
  if (m < 0) throw std::invalid_argument("count_atleast: negative weight");
  return Int(atleast_partitions(i, n, m)[static_cast<size_t>(m)].size());
}

ColouredPartition exact_from_colours(const std::vector<int>& colours, int i) {
  ColouredPartition p;
  p.resize(colours.size() + 1);
  p.back() = {0, i};
  int below_colour = i;
  int size = 0;
  for (size_t k = colours.size(); k-- > 0;) {
    size += std::abs(colours[k] - below_colour);
    p[k] = {size, colours[k]};
    below_colour = colours[k];
  }
  return p;
}

bool is_exact_valid(const ColouredPartition& p, int i, int n) {
  require_in(i, n, "is_exact_valid");
  if (p.empty() || p.back() != ColouredPart{0, i}) return false;
  for (const auto& part : p)
    if (part.colour < 0 || part.colour > n) return false;
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k].size - p[k + 1].size != std::abs(p[k].colour - p[k + 1].colour)) return false;
  if (p.size() >= 2 && p[p.size() - 2].colour == i) return false;
  return true;
}

bool is_atleast_valid(const ColouredPartition& p, int i, int n) {
  require_in(i, n, "is_atleast_valid");
  if (p.empty() || p.back() != ColouredPart{0, i}) return false;
  for (const auto& part : p)
    if (part.colour < 0 || part.colour > n) return false;
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k].size - p[k + 1].size < std::abs(p[k].colour - p[k + 1].colour)) return false;
  if (p.size() >= 2 && p[p.size() - 2] == ColouredPart{0, i}) return false;
  return true;
}

ColouredSeries coloured_gf(const std::map<int, std::vector<ColouredPartition>>& buckets,
                           int nvars, int trunc_order) {
  int q_min = 0;
  for (const auto& [w, list] : buckets)
    if (!list.empty()) q_min = std::min(q_min, w);
  ColouredSeries gf(nvars, trunc_order, q_min);
  std::vector<int> exps;
  for (const auto& [w, list] : buckets) {
    if (w > trunc_order) continue;
    for (const auto& p : list) {
      exps.assign(static_cast<size_t>(nvars), 0);
      for (const auto& part : p) {
        if (part.colour < 0 || part.colour >= nvars)
          throw std::invalid_argument("coloured_gf: colour outside variable range");
        ++exps[static_cast<size_t>(part.colour)];
      }
      gf.add_term(w, exps, Int(1));
    }
  }
  return gf;
}

/* ---------------- energy-grounded enumeration ---------------- */

static void validate_family(const GroundedFamily& fam) {
  const int C = fam.table.ncolours();
  if (C <= 0) throw std::invalid_argument("grounded_partitions: empty energy table");
  for (const auto& row : fam.table.e)
    if (static_cast<int>(row.size()) != C)
      throw std::invalid_argument("grounded_partitions: energy table is not square");
  if (fam.d < 1) throw std::invalid_argument("grounded_partitions: step must be >= 1");
  const auto& tail = fam.ground.tail;
  if (tail.empty()) throw std::invalid_argument("grounded_partitions: empty ground tail");
  long long sum = 0;
  for (const auto& part : tail) {
    if (part.colour < 0 || part.colour >= C)
      throw std::invalid_argument("grounded_partitions: tail colour out of range");
    sum += part.size;
  }
  if (sum != 0)
    throw std::invalid_argument("grounded_partitions: tail sizes must sum to zero");
  // the tail must satisfy the relation cyclically
  const int t = static_cast<int>(tail.size());
  for (int k = 0; k < t; ++k) {
    const ColouredPart& hi = tail[static_cast<size_t>(k)];
    const ColouredPart& lo = tail[static_cast<size_t>((k + 1) % t)];
    const int diff = hi.size - lo.size - fam.table.at(lo.colour, hi.colour);
    if (diff < 0 || diff % fam.d != 0)
      throw std::invalid_argument("grounded_partitions: tail violates its own relation");
  }
}

std::map<int, std::vector<ColouredPartition>> grounded_partitions(
    const GroundedFamily& fam, int max_weight) {
  validate_family(fam);
  const auto& tail = fam.ground.tail;
  const int t = static_cast<int>(tail.size());
  const int C = fam.table.ncolours();
  int min_tail = 0;
  for (const auto& part : tail) min_tail = std::min(min_tail, part.size);
  // Sizes never descend below the tail minimum; negative parts are rare (the
  // relation forces positive neighbours above them), so cumulative weights
  // along the build exceed the final weight by a small slack only.  The
  // closed-product comparisons in the test suite confirm completeness.
  const int slack = (t + 2) * std::max(0, -min_tail);

  std::map<int, std::vector<ColouredPartition>> buckets;
  std::vector<ColouredPart> added;  // parts above the tail, bottom-up
  std::vector<long long> cum;       // cumulative weight after each added part

  const auto emit = [&](long long w) {
    if (fam.parts_multiple_of_tail &&
        (static_cast<int>(added.size()) % t) != 0)
      return;
    if (w > max_weight) return;
    ColouredPartition p(added.rbegin(), added.rend());
    p.insert(p.end(), tail.begin(), tail.end());
    buckets[static_cast<int>(w)].push_back(std::move(p));
  };

  std::function<void(long long)> rec = [&](long long w) {
    // the t parts directly above the tail must not repeat it
    if (static_cast<int>(added.size()) == t) {
      bool repeats = true;
      for (int k = 0; k < t; ++k)
        repeats = repeats && added[static_cast<size_t>(k)] ==
                                 tail[static_cast<size_t>(t - 1 - k)];
      if (repeats) return;
    }
    // a recurring (top part, cumulative weight) state would allow unbounded
    // zero-weight pumping: the segment between the repeats could be stacked
    // forever without changing the weight
    if (!added.empty()) {
      for (size_t d = 0; d + 1 < added.size(); ++d) {
        if (added[d] == added.back() && cum[d] == w)
          throw std::runtime_error(
              "grounded_partitions: the relation admits a zero-weight cycle; "
              "the family is not enumerable by weight");
      }
    }
    emit(w);
    const ColouredPart top = added.empty() ? tail.front() : added.back();
    for (int u = 0; u < C; ++u) {
      const int base = top.size + fam.table.at(top.colour, u);
      // admissible sizes are base + d*j, clamped below by the tail minimum
      long long start = base;
      if (start < min_tail)
        start = base + ((min_tail - base + fam.d - 1) / fam.d) * static_cast<long long>(fam.d);
      for (long long size = start; w + size <= max_weight + slack; size += fam.d) {
        added.push_back({static_cast<int>(size), u});
        cum.push_back(w + size);
        rec(w + size);
        cum.pop_back();
        added.pop_back();
      }
    }
  };
  rec(0);
  return buckets;
}

std::vector<int> ground_tail_values(const EnergyTable& table, const std::vector<int>& grounds) {
  const int t = static_cast<int>(grounds.size());
  if (t < 1) throw std::invalid_argument("ground_tail_values: empty ground cycle");
  for (int g : grounds)
    if (g < 0 || g >= table.ncolours())
      throw std::invalid_argument("ground_tail_values: ground colour out of range");
  std::vector<int> E(static_cast<size_t>(t));
  for (int l = 0; l < t; ++l)
    E[static_cast<size_t>(l)] =
        table.at(grounds[static_cast<size_t>((l + 1) % t)], grounds[static_cast<size_t>(l)]);
  long long first = 0;
  for (int l = 0; l < t; ++l) first += static_cast<long long>(l + 1) * E[static_cast<size_t>(l)];
  if (first % t != 0)
    throw std::domain_error("ground_tail_values: cycle energy is not divisible by the period");
  const long long base = -first / t;
  std::vector<int> u(static_cast<size_t>(t));
  for (int k = 0; k < t; ++k) {
    long long v = base;
    for (int l = k; l < t; ++l) v += E[static_cast<size_t>(l)];
    u[static_cast<size_t>(k)] = static_cast<int>(v);
  }
  return u;
}

/* ---------------- split / merge ---------------- */

SplitResult psi_split(const ColouredPartition& pi, int i, int n) {
  if (!is_atleast_valid(pi, i, n))
    throw std::invalid_argument("psi_split: input is not a valid at-least partition");
  const int s = static_cast<int>(pi.size()) - 1;  // non-ground part count
  int r = 0;
  for (int k = s; k >= 1; --k) {
    if (pi[static_cast<size_t>(k - 1)].colour != i) {
      r = k;
      break;
    }
  }
  std::vector<int> colours(static_cast<size_t>(r));
  for (int k = 0; k < r; ++k) colours[static_cast<size_t>(k)] = pi[static_cast<size_t>(k)].colour;
  SplitResult out;
  out.mu = exact_from_colours(colours, i);

  if (r < s) {
    out.nu.resize(static_cast<size_t>(s));
    for (int k = 0; k < r; ++k)
      out.nu[static_cast<size_t>(k)] =
          pi[static_cast<size_t>(k)].size - out.mu[static_cast<size_t>(k)].size;
    for (int k = r; k < s; ++k) out.nu[static_cast<size_t>(k)] = pi[static_cast<size_t>(k)].size;
  } else {
    out.nu.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
      const int diff = pi[static_cast<size_t>(k)].size - out.mu[static_cast<size_t>(k)].size;
      if (diff == 0) break;  // differences are weakly decreasing; zeros stay zero
      out.nu.push_back(diff);
    }
  }
  for (size_t k = 0; k + 1 < out.nu.size(); ++k) {
    if (out.nu[k] < out.nu[k + 1])
      throw std::logic_error("psi_split: leftover differences are not a partition");
  }
  if (!out.nu.empty() && out.nu.back() <= 0)
    throw std::logic_error("psi_split: leftover differences are not positive");
  return out;
}

ColouredPartition psi_merge(const SplitResult& parts, int i, int n) {
  if (!is_exact_valid(parts.mu, i, n))
    throw std::invalid_argument("psi_merge: mu is not a valid exact partition");
  for (size_t k = 0; k + 1 < parts.nu.size(); ++k)
    if (parts.nu[k] < parts.nu[k + 1])
      throw std::invalid_argument("psi_merge: nu is not weakly decreasing");
  if (!parts.nu.empty() && parts.nu.back() <= 0)
    throw std::invalid_argument("psi_merge: nu parts must be positive");

  const int r = static_cast<int>(parts.mu.size()) - 1;
  const int L = static_cast<int>(parts.nu.size());
  ColouredPartition pi;
  if (L > r) {
    pi.resize(static_cast<size_t>(L) + 1);
    for (int k = 0; k < r; ++k)
      pi[static_cast<size_t>(k)] = {parts.mu[static_cast<size_t>(k)].size +
                                        parts.nu[static_cast<size_t>(k)],
                                    parts.mu[static_cast<size_t>(k)].colour};
    for (int k = r; k < L; ++k)
      pi[static_cast<size_t>(k)] = {parts.nu[static_cast<size_t>(k)], i};
    pi.back() = {0, i};
  } else {
    pi = parts.mu;
    for (int k = 0; k < L; ++k) pi[static_cast<size_t>(k)].size += parts.nu[static_cast<size_t>(k)];
  }
  if (!is_atleast_valid(pi, i, n))
    throw std::invalid_argument("psi_merge: the pair does not merge to a valid partition");
  return pi;
}

}  // namespace qaffine

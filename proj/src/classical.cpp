#include "qaffine/classical.hpp"

#include <algorithm>
#include <functional>

namespace qaffine {

Int count_partitions(int m) {
  if (m < 0) throw std::invalid_argument("count_partitions: negative weight");
  // p(m) via the bounded-largest-part recurrence, exact.
  std::vector<std::vector<Int>> dp(static_cast<size_t>(m) + 1,
                                   std::vector<Int>(static_cast<size_t>(m) + 1, Int(0)));
  for (int k = 0; k <= m; ++k) dp[0][static_cast<size_t>(k)] = 1;
  for (int w = 1; w <= m; ++w) {
    for (int k = 1; k <= m; ++k) {
      dp[static_cast<size_t>(w)][static_cast<size_t>(k)] =
          dp[static_cast<size_t>(w)][static_cast<size_t>(k - 1)];
      if (w - k >= 0)
        dp[static_cast<size_t>(w)][static_cast<size_t>(k)] +=
            dp[static_cast<size_t>(w - k)][static_cast<size_t>(k)];
    }
  }
  return m == 0 ? Int(1) : dp[static_cast<size_t>(m)][static_cast<size_t>(m)];
}

// Enumerate weakly decreasing positive partitions of m and feed each to `fn`.
static void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      fn(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(m, m);
}

static void require_ir(int i, int r, const char* who) {
  if (r < 2) throw std::invalid_argument(std::string(who) + ": requires r >= 2");
  if (i < 1 || i > r) throw std::invalid_argument(std::string(who) + ": requires 1 <= i <= r");
}

static bool gap_ok(const std::vector<int>& L, int r) {
  for (size_t j = 0; j + static_cast<size_t>(r) - 1 < L.size(); ++j)
    if (L[j] - L[j + static_cast<size_t>(r) - 1] < 2) return false;
  return true;
}

static bool ones_ok(const std::vector<int>& L, int i) {
  int ones = 0;
  for (int p : L) ones += (p == 1);
  return ones <= i - 1;
}

Int andrews_gordon_count(int i, int r, int m) {
  require_ir(i, r, "andrews_gordon_count");
  if (m < 0) throw std::invalid_argument("andrews_gordon_count: negative weight");
  Int n(0);
  for_each_partition(m, [&](const std::vector<int>& L) {
    if (gap_ok(L, r) && ones_ok(L, i)) ++n;
  });
  return n;
}

Int bressoud_count(int i, int r, int m) {
  require_ir(i, r, "bressoud_count");
  if (m < 0) throw std::invalid_argument("bressoud_count: negative weight");
  Int n(0);
  for_each_partition(m, [&](const std::vector<int>& L) {
    if (!gap_ok(L, r) || !ones_ok(L, i)) return;
    // window parity: a flat window of r-1 consecutive parts must have the
    // prescribed sum parity
    for (size_t j = 0; j + static_cast<size_t>(r) - 2 < L.size(); ++j) {
      const size_t jend = j + static_cast<size_t>(r) - 2;
      if (L[j] <= L[jend] + 1) {
        long long sum = 0;
        for (size_t k = j; k <= jend; ++k) sum += L[k];
        if (((sum - (i - 1)) % 2 + 2) % 2 != 0) return;
      }
    }
    ++n;
  });
  return n;
}

Int meurman_primc_count(int i, int n, int m) {
  if (i < 0 || n < 0 || i > n)
    throw std::invalid_argument("meurman_primc_count: requires 0 <= i <= n");
  if (m < 0) throw std::invalid_argument("meurman_primc_count: negative weight");
  // f[k] = frequency of plain k, fu[k] = frequency of underlined k (odd only).
  std::vector<int> f(static_cast<size_t>(m) + 2, 0), fu(static_cast<size_t>(m) + 2, 0);
  Int total(0);

  auto windows_ok = [&]() {
    auto F = [&](int k) { return (k >= 1 && k <= m) ? f[static_cast<size_t>(k)] : 0; };
    auto FU = [&](int k) { return (k >= 1 && k <= m) ? fu[static_cast<size_t>(k)] : 0; };
    if (FU(1) > i || F(1) > n - i) return false;
    for (int k = 1; 2 * k - 1 <= m + 2; ++k) {
      if (F(2 * k + 1) + F(2 * k) + F(2 * k - 1) > n) return false;
      if (F(2 * k) + FU(2 * k - 1) + F(2 * k - 1) > n) return false;
      if (FU(2 * k + 1) + F(2 * k + 1) + F(2 * k) > n) return false;
      if (FU(2 * k + 1) + F(2 * k) + FU(2 * k - 1) > n) return false;
    }
    return true;
  };

  // Assign frequencies part size by part size with the remaining weight.
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (remaining == 0) {
      if (windows_ok()) ++total;
      return;
    }
    if (k > remaining) return;
    const int max_plain = std::min(n, remaining / k);
    const int max_under = (k % 2 == 1) ? std::min(n, remaining / k) : 0;
    for (int a = 0; a <= max_plain; ++a) {
      if (a * k > remaining) break;
      for (int b = 0; b <= max_under && a * k + b * k <= remaining; ++b) {
        f[static_cast<size_t>(k)] = a;
        fu[static_cast<size_t>(k)] = b;
        rec(k + 1, remaining - a * k - b * k);
      }
    }
    f[static_cast<size_t>(k)] = 0;
    fu[static_cast<size_t>(k)] = 0;
  };
  rec(1, m);
  return total;
}

QSeries product_side(ProductFamily family, const ProductParams& params, int trunc_order) {
  const int i = params.i;
  QSeries euler_inv = qs_inv(poch_q(trunc_order, Int(1), 1, 1));  // 1/(q;q)_inf
  switch (family) {
    case ProductFamily::kAndrewsGordon: {
      require_ir(i, params.rn, "product_side");
      const int r = params.rn;
      QSeries p = poch_q(trunc_order, Int(1), 2 * r + 1, 2 * r + 1);
      p = qs_mul(p, poch_q(trunc_order, Int(1), i, 2 * r + 1));
      p = qs_mul(p, poch_q(trunc_order, Int(1), 2 * r - i + 1, 2 * r + 1));
      return qs_mul(p, euler_inv);
    }
    case ProductFamily::kBressoud: {
      require_ir(i, params.rn, "product_side");
      const int r = params.rn;
      QSeries p = poch_q(trunc_order, Int(1), 2 * r, 2 * r);
      p = qs_mul(p, poch_q(trunc_order, Int(1), i, 2 * r));
      p = qs_mul(p, poch_q(trunc_order, Int(1), 2 * r - i, 2 * r));
      return qs_mul(p, euler_inv);
    }
    case ProductFamily::kMainExact:
    case ProductFamily::kMainAtLeast: {
      const int n = params.rn;
      if (i < 0 || n < 0 || i > n)
        throw std::invalid_argument("product_side: requires 0 <= i <= n");
      QSeries p = poch_q(trunc_order, Int(1), i + 1, n + 2);
      p = qs_mul(p, poch_q(trunc_order, Int(1), n - i + 1, n + 2));
      p = qs_mul(p, poch_q(trunc_order, Int(1), n + 2, n + 2));
      p = qs_mul(p, qs_inv(poch_q(trunc_order, Int(1), 1, 2)));  // 1/(q;q^2)_inf
      p = qs_mul(p, euler_inv);
      if (family == ProductFamily::kMainAtLeast) p = qs_mul(p, euler_inv);
      return p;
    }
  }
  throw std::invalid_argument("product_side: unknown family");
}

}  // namespace qaffine

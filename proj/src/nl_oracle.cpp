#include "honey/nl_oracle.hpp"

#include <algorithm>

#include "honey/lr_oracle.hpp"

namespace honey {

namespace {

// All partitions of total t fitting under the row caps (weakly decreasing
// caps assumed), emitted in deterministic order.
void partitions_of(long long t, const std::vector<long long>& caps, size_t row, long long rowCap,
                   Partition& cur, std::vector<Partition>& out) {
  if (t == 0) {
    out.push_back(trim(cur));
    return;
  }
  if (row == caps.size()) return;
  long long hi = std::min(rowCap, caps[row]);
  for (long long v = std::min(hi, t); v >= 1; --v) {
    cur.push_back(v);
    partitions_of(t - v, caps, row + 1, v, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_under(long long t, const Partition& capA, const Partition& capB) {
  std::vector<long long> caps;
  size_t rows = std::min(capA.size(), capB.size());
  for (size_t r = 0; r < rows; ++r) caps.push_back(std::min(capA[r], capB[r]));
  std::vector<Partition> out;
  Partition cur;
  if (t >= 0) partitions_of(t, caps, 0, t == 0 ? 0 : caps.empty() ? 0 : t, cur, out);
  return out;
}

}  // namespace

Int nl_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  long long wl = weight(lambda), wm = weight(mu), wn = weight(nu);
  long long ta2 = wm + wn - wl, tb2 = wl + wn - wm, tc2 = wl + wm - wn;
  if (ta2 < 0 || tb2 < 0 || tc2 < 0) return 0;
  if (ta2 % 2 != 0 || tb2 % 2 != 0 || tc2 % 2 != 0) return 0;
  long long ta = ta2 / 2, tb = tb2 / 2, tc = tc2 / 2;

  Partition lam = trim(lambda), m = trim(mu), n = trim(nu);
  auto alphas = partitions_under(ta, m, n);
  auto betas = partitions_under(tb, lam, n);
  auto gammas = partitions_under(tc, lam, m);

  Int total = 0;
  for (const auto& beta : betas)
    for (const auto& gamma : gammas) {
      Int c1 = lr_oracle(lam, beta, gamma);
      if (c1 == 0) continue;
      for (const auto& alpha : alphas) {
        Int c2 = lr_oracle(m, gamma, alpha);
        if (c2 == 0) continue;
        Int c3 = lr_oracle(n, alpha, beta);
        if (c3 == 0) continue;
        total += c1 * c2 * c3;
      }
    }
  return total;
}

}  // namespace honey

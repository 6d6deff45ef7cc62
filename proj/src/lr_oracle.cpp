#include "honey/lr_oracle.hpp"

#include <algorithm>

namespace honey {

namespace {

struct Cell {
  int row;  // 0-based
  int col;  // 0-based
};

struct Filler {
  std::vector<long long> lam;  // padded shape
  std::vector<long long> mu;   // padded inner shape
  std::vector<long long> nuCount;
  std::vector<long long> used;           // letters placed so far, per value
  std::vector<std::vector<int>> letter;  // letter[r][c], 0 = empty
  std::vector<Cell> order;               // reverse reading word order
  Int count = 0;

  void fill(size_t pos) {
    if (pos == order.size()) {
      ++count;
      return;
    }
    auto [r, c] = order[pos];
    // Cells are visited rows top to bottom, right to left inside a row, so
    // the right neighbor and the cell above are already placed. Cells of the
    // inner shape stay 0 and impose no constraint.
    int above = (r > 0 && c < lam[r - 1]) ? letter[r - 1][c] : 0;
    int right = (c + 1 < lam[r]) ? letter[r][c + 1] : 0;
    int maxV = static_cast<int>(nuCount.size());
    for (int v = 1; v <= maxV; ++v) {
      if (above != 0 && v <= above) continue;       // columns strictly increase
      if (right != 0 && v > right) continue;        // rows weakly increase (left <= right)
      if (used[v - 1] >= nuCount[v - 1]) continue;  // content bound
      // Lattice condition on the reverse reading word: after each prefix,
      // every value v occurs at most as often as v-1.
      if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
      used[v - 1]++;
      letter[r][c] = v;
      fill(pos + 1);
      letter[r][c] = 0;
      used[v - 1]--;
    }
  }
};

}  // namespace

Int lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  Partition lam = trim(lambda), m = trim(mu), n = trim(nu);
  if (weight(lam) != weight(m) + weight(n)) return 0;
  if (m.size() > lam.size()) return 0;
  for (size_t r = 0; r < m.size(); ++r)
    if (m[r] > lam[r]) return 0;  // mu must fit inside lambda
  if (n.empty()) return (weight(lam) == weight(m)) ? Int(1) : Int(0);

  Filler f;
  f.lam.assign(lam.begin(), lam.end());
  f.mu.assign(m.begin(), m.end());
  f.mu.resize(f.lam.size(), 0);
  f.nuCount.assign(n.begin(), n.end());
  f.used.assign(n.size(), 0);
  f.letter.resize(f.lam.size());
  for (size_t r = 0; r < f.lam.size(); ++r) f.letter[r].assign(f.lam[r], 0);
  for (size_t r = 0; r < f.lam.size(); ++r)
    for (long long c = f.lam[r] - 1; c >= f.mu[r]; --c)
      f.order.push_back({static_cast<int>(r), static_cast<int>(c)});

  f.fill(0);
  return f.count;
}

}  // namespace honey

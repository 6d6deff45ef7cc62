#include "honey/lp.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace honey {

namespace {

// Variables are rewritten so every simplex column u satisfies u >= 0 with an
// optional finite upper bound. Box bounds never become tableau rows.
enum class Sub { ShiftLo, ShiftHi, Split };

struct VarMap {
  Sub kind = Sub::ShiftLo;
  Rat shift;     // lo for ShiftLo, hi for ShiftHi
  int col = -1;  // tableau column
  int neg = -1;  // negative part for Split
};

// Dense tableau for the bounded-variable simplex. `a` holds B^-1 A, `val`
// holds the current value of the basic variable of each row, and nonbasic
// columns sit at 0 or at their upper bound according to `atUpper`.
struct Tableau {
  int m = 0;
  int n = 0;        // live columns, artificial columns included while present
  int numReal = 0;  // structural plus slack columns
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> val;
  std::vector<int> basis;
  std::vector<std::optional<Rat>> ub;
  std::vector<char> atUpper;
  std::vector<char> isBasic;
};

struct Prep {
  Tableau t;
  std::vector<VarMap> vmap;
  bool boundsCrossed = false;
};

// Pivots at (p, col) and keeps every cost row in `costs` reduced.
void pivot_rows(Tableau& t, std::vector<std::vector<Rat>>& costs, int p, int col) {
  auto& ap = t.a[p];
  Rat piv = ap[col];
  if (piv != 1) {
    for (auto& v : ap) {
      if (v != 0) v /= piv;
    }
    ap[col] = 1;
  }
  for (int i = 0; i < t.m; ++i) {
    if (i == p) continue;
    Rat f = t.a[i][col];
    if (f == 0) continue;
    auto& ai = t.a[i];
    for (int j = 0; j < t.n; ++j) {
      if (ap[j] != 0) ai[j] -= f * ap[j];
    }
    ai[col] = 0;
  }
  for (auto& r : costs) {
    Rat f = r[col];
    if (f == 0) continue;
    for (int j = 0; j < t.n; ++j) {
      if (ap[j] != 0) r[j] -= f * ap[j];
    }
    r[col] = 0;
  }
}

// r_j = c_B B^-1 A_j - c_j; zero on basic columns.
std::vector<Rat> reduced_costs(const Tableau& t, const std::vector<Rat>& c) {
  std::vector<Rat> r(t.n, Rat(0));
  for (int j = 0; j < t.n; ++j) {
    if (c[j] != 0) r[j] = -c[j];
  }
  for (int i = 0; i < t.m; ++i) {
    const Rat& cb = c[t.basis[i]];
    if (cb == 0) continue;
    const auto& ai = t.a[i];
    for (int j = 0; j < t.n; ++j) {
      if (ai[j] != 0) r[j] += cb * ai[j];
    }
  }
  return r;
}

// Maximizes R[0], then R[1] over its optimal face, and so on. A column is
// improving when the first nonzero reduced cost across levels points the
// right way for its current bound. Pricing is Dantzig by (level, magnitude)
// with a permanent Bland fallback after a run of degenerate steps, which
// keeps the method exact, deterministic, and terminating.
LPStatus run_lex(Tableau& t, std::vector<std::vector<Rat>>& R) {
  const int kStallLimit = 60;
  int stall = 0;
  bool bland = false;
  for (;;) {
    int enter = -1;
    int bestLevel = 0;
    Rat bestMag;
    for (int j = 0; j < t.numReal; ++j) {
      if (t.isBasic[j]) continue;
      if (t.ub[j] && *t.ub[j] == 0) continue;
      int level = -1;
      for (int k = 0; k < (int)R.size(); ++k) {
        if (R[k][j] != 0) {
          level = k;
          break;
        }
      }
      if (level < 0) continue;
      const Rat& r = R[level][j];
      const bool improving = t.atUpper[j] ? (r > 0) : (r < 0);
      if (!improving) continue;
      if (bland) {
        enter = j;
        break;
      }
      Rat mag = r < 0 ? Rat(-r) : r;
      if (enter < 0 || level < bestLevel || (level == bestLevel && mag > bestMag)) {
        enter = j;
        bestLevel = level;
        bestMag = mag;
      }
    }
    if (enter < 0) return LPStatus::OPTIMAL;

    const int sigma = t.atUpper[enter] ? -1 : 1;
    bool haveRow = false;
    Rat rowLimit;
    int leave = -1;
    for (int i = 0; i < t.m; ++i) {
      const Rat& aij = t.a[i][enter];
      if (aij == 0) continue;
      Rat d = sigma > 0 ? aij : Rat(-aij);
      Rat limit;
      if (d > 0) {
        limit = t.val[i] / d;
      } else {
        const auto& bu = t.ub[t.basis[i]];
        if (!bu) continue;
        limit = (*bu - t.val[i]) / Rat(-d);
      }
      if (!haveRow || limit < rowLimit ||
          (limit == rowLimit && t.basis[i] < t.basis[leave])) {
        haveRow = true;
        rowLimit = limit;
        leave = i;
      }
    }

    bool flip = false;
    Rat step;
    if (t.ub[enter] && (!haveRow || *t.ub[enter] < rowLimit)) {
      flip = true;
      step = *t.ub[enter];
    } else if (haveRow) {
      step = rowLimit;
    } else {
      return LPStatus::UNBOUNDED;
    }

    if (step != 0) {
      for (int i = 0; i < t.m; ++i) {
        const Rat& aij = t.a[i][enter];
        if (aij == 0) continue;
        Rat delta = aij * step;
        if (sigma > 0) {
          t.val[i] -= delta;
        } else {
          t.val[i] += delta;
        }
      }
    }

    if (flip) {
      t.atUpper[enter] = !t.atUpper[enter];
      stall = 0;
      continue;
    }

    Rat enterVal = t.atUpper[enter] ? *t.ub[enter] : Rat(0);
    if (sigma > 0) {
      enterVal += step;
    } else {
      enterVal -= step;
    }
    const int lv = t.basis[leave];
    const Rat dLeave = sigma > 0 ? t.a[leave][enter] : Rat(-t.a[leave][enter]);
    t.isBasic[lv] = 0;
    t.atUpper[lv] = dLeave < 0 ? 1 : 0;
    pivot_rows(t, R, leave, enter);
    t.basis[leave] = enter;
    t.isBasic[enter] = 1;
    t.val[leave] = enterVal;

    stall = step == 0 ? stall + 1 : 0;
    if (stall >= kStallLimit) bland = true;
  }
}

Prep prepare(const LinearProgram& lp) {
  const int nv = lp.numVars;
  if (nv < 0) throw InputError("lp: negative variable count");
  if (!lp.lo.empty() && (int)lp.lo.size() != nv)
    throw InputError("lp: lower bound list size mismatch");
  if (!lp.hi.empty() && (int)lp.hi.size() != nv)
    throw InputError("lp: upper bound list size mismatch");

  static const std::optional<Rat> kNone;
  auto lo_of = [&](int i) -> const std::optional<Rat>& {
    return lp.lo.empty() ? kNone : lp.lo[(size_t)i];
  };
  auto hi_of = [&](int i) -> const std::optional<Rat>& {
    return lp.hi.empty() ? kNone : lp.hi[(size_t)i];
  };

  Prep prep;
  auto& t = prep.t;
  prep.vmap.resize((size_t)nv);
  int cols = 0;
  for (int i = 0; i < nv; ++i) {
    const auto& lo = lo_of(i);
    const auto& hi = hi_of(i);
    auto& vm = prep.vmap[(size_t)i];
    if (lo) {
      if (hi && *hi < *lo) prep.boundsCrossed = true;
      vm.kind = Sub::ShiftLo;
      vm.shift = *lo;
      vm.col = cols++;
    } else if (hi) {
      vm.kind = Sub::ShiftHi;
      vm.shift = *hi;
      vm.col = cols++;
    } else {
      vm.kind = Sub::Split;
      vm.col = cols++;
      vm.neg = cols++;
    }
  }
  if (prep.boundsCrossed) return prep;

  const int numStruct = cols;
  int numSlack = 0;
  for (const auto& row : lp.rows) {
    if (row.rel != 0 && row.rel != 1 && row.rel != -1)
      throw InputError("lp: bad row relation");
    if (row.rel != 0) ++numSlack;
  }
  const int numReal = numStruct + numSlack;
  const int m = (int)lp.rows.size();
  t.m = m;
  t.numReal = numReal;
  t.a.assign((size_t)m, std::vector<Rat>((size_t)numReal, Rat(0)));
  t.val.assign((size_t)m, Rat(0));
  t.basis.assign((size_t)m, -1);
  t.ub.assign((size_t)numReal, std::nullopt);
  for (int i = 0; i < nv; ++i) {
    const auto& lo = lo_of(i);
    const auto& hi = hi_of(i);
    if (lo && hi) t.ub[(size_t)prep.vmap[(size_t)i].col] = *hi - *lo;
  }

  int slackAt = numStruct;
  std::vector<int> needArt;
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[(size_t)r];
    auto& ar = t.a[(size_t)r];
    Rat rhs = row.rhs;
    for (const auto& [vi, c] : row.terms) {
      if (vi < 0 || vi >= nv) throw InputError("lp: row term index out of range");
      if (c == 0) continue;
      const auto& vm = prep.vmap[(size_t)vi];
      switch (vm.kind) {
        case Sub::ShiftLo:
          ar[(size_t)vm.col] += c;
          rhs -= c * vm.shift;
          break;
        case Sub::ShiftHi:
          ar[(size_t)vm.col] -= c;
          rhs -= c * vm.shift;
          break;
        case Sub::Split:
          ar[(size_t)vm.col] += c;
          ar[(size_t)vm.neg] -= c;
          break;
      }
    }
    int slackCol = -1;
    if (row.rel != 0) {
      slackCol = slackAt++;
      ar[(size_t)slackCol] = row.rel > 0 ? Rat(-1) : Rat(1);
    }
    if (rhs < 0) {
      for (auto& v : ar) {
        if (v != 0) v = -v;
      }
      rhs = -rhs;
    }
    t.val[(size_t)r] = rhs;
    if (slackCol >= 0 && ar[(size_t)slackCol] == 1) {
      t.basis[(size_t)r] = slackCol;
    } else {
      needArt.push_back(r);
    }
  }

  t.n = numReal + (int)needArt.size();
  for (auto& rowv : t.a) rowv.resize((size_t)t.n, Rat(0));
  t.ub.resize((size_t)t.n);
  int artAt = numReal;
  for (int r : needArt) {
    t.a[(size_t)r][(size_t)artAt] = 1;
    t.basis[(size_t)r] = artAt;
    ++artAt;
  }
  t.atUpper.assign((size_t)t.n, 0);
  t.isBasic.assign((size_t)t.n, 0);
  for (int r = 0; r < m; ++r) t.isBasic[(size_t)t.basis[(size_t)r]] = 1;
  return prep;
}

// Runs phase one. Returns false when the program is infeasible; on success
// every artificial column is nonbasic at zero and redundant rows are gone.
bool phase_one(Tableau& t) {
  if (t.n == t.numReal) return true;
  std::vector<Rat> cost((size_t)t.n, Rat(0));
  for (int j = t.numReal; j < t.n; ++j) cost[(size_t)j] = Rat(-1);
  std::vector<std::vector<Rat>> R{reduced_costs(t, cost)};
  run_lex(t, R);
  Rat leftover(0);
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[(size_t)i] >= t.numReal) leftover += t.val[(size_t)i];
  }
  if (leftover != 0) return false;

  // Drive basic artificials out at value zero; rows with no remaining real
  // coefficient are redundant and dropped.
  std::vector<std::vector<Rat>> noCosts;
  std::vector<char> drop((size_t)t.m, 0);
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[(size_t)i] < t.numReal) continue;
    int col = -1;
    for (int j = 0; j < t.numReal; ++j) {
      if (t.a[(size_t)i][(size_t)j] != 0) {
        col = j;
        break;
      }
    }
    if (col < 0) {
      drop[(size_t)i] = 1;
      continue;
    }
    t.isBasic[(size_t)t.basis[(size_t)i]] = 0;
    Rat keep = (t.atUpper[(size_t)col] && t.ub[(size_t)col]) ? *t.ub[(size_t)col] : Rat(0);
    pivot_rows(t, noCosts, i, col);
    t.basis[(size_t)i] = col;
    t.isBasic[(size_t)col] = 1;
    t.val[(size_t)i] = keep;
  }
  int w = 0;
  for (int i = 0; i < t.m; ++i) {
    if (drop[(size_t)i]) continue;
    if (w != i) {
      t.a[(size_t)w] = std::move(t.a[(size_t)i]);
      t.val[(size_t)w] = t.val[(size_t)i];
      t.basis[(size_t)w] = t.basis[(size_t)i];
    }
    ++w;
  }
  t.m = w;
  t.a.resize((size_t)w);
  t.val.resize((size_t)w);
  t.basis.resize((size_t)w);
  for (auto& row : t.a) row.resize((size_t)t.numReal);
  t.n = t.numReal;
  t.ub.resize((size_t)t.n);
  t.atUpper.resize((size_t)t.n);
  t.isBasic.resize((size_t)t.n);
  return true;
}

std::vector<Rat> column_values(const Tableau& t) {
  std::vector<Rat> x((size_t)t.n, Rat(0));
  for (int j = 0; j < t.n; ++j) {
    if (!t.isBasic[(size_t)j] && t.atUpper[(size_t)j] && t.ub[(size_t)j])
      x[(size_t)j] = *t.ub[(size_t)j];
  }
  for (int i = 0; i < t.m; ++i) x[(size_t)t.basis[(size_t)i]] = t.val[(size_t)i];
  return x;
}

std::vector<Rat> original_point(const Prep& prep, const std::vector<Rat>& x) {
  std::vector<Rat> p(prep.vmap.size(), Rat(0));
  for (size_t i = 0; i < prep.vmap.size(); ++i) {
    const auto& vm = prep.vmap[i];
    switch (vm.kind) {
      case Sub::ShiftLo:
        p[i] = vm.shift + x[(size_t)vm.col];
        break;
      case Sub::ShiftHi:
        p[i] = vm.shift - x[(size_t)vm.col];
        break;
      case Sub::Split:
        p[i] = x[(size_t)vm.col] - x[(size_t)vm.neg];
        break;
    }
  }
  return p;
}

std::vector<Rat> dense_cost(const Prep& prep, int width,
                            const std::vector<std::pair<int, Rat>>& objective) {
  std::vector<Rat> c((size_t)width, Rat(0));
  for (const auto& [vi, coef] : objective) {
    if (vi < 0 || vi >= (int)prep.vmap.size())
      throw InputError("lp: objective term index out of range");
    const auto& vm = prep.vmap[(size_t)vi];
    switch (vm.kind) {
      case Sub::ShiftLo:
        c[(size_t)vm.col] += coef;
        break;
      case Sub::ShiftHi:
        c[(size_t)vm.col] -= coef;
        break;
      case Sub::Split:
        c[(size_t)vm.col] += coef;
        c[(size_t)vm.neg] -= coef;
        break;
    }
  }
  return c;
}

LPResult solve_many(const LinearProgram& lp,
                    const std::vector<std::vector<std::pair<int, Rat>>>& objectives) {
  LPResult res;
  Prep prep = prepare(lp);
  if (prep.boundsCrossed) {
    res.status = LPStatus::INFEASIBLE;
    return res;
  }
  auto& t = prep.t;
  if (!phase_one(t)) {
    res.status = LPStatus::INFEASIBLE;
    return res;
  }
  std::vector<std::vector<Rat>> R;
  R.reserve(objectives.size());
  for (const auto& obj : objectives) R.push_back(reduced_costs(t, dense_cost(prep, t.n, obj)));
  res.status = run_lex(t, R);
  if (res.status != LPStatus::OPTIMAL) return res;
  res.point = original_point(prep, column_values(t));
  res.value = Rat(0);
  if (!objectives.empty()) {
    for (const auto& [vi, coef] : objectives.front()) res.value += coef * res.point[(size_t)vi];
  }
  return res;
}

}  // namespace

LPResult solve_lp(const LinearProgram& lp) { return solve_many(lp, {lp.objective}); }

LPResult solve_lp_lex(const LinearProgram& lp,
                      const std::vector<std::vector<std::pair<int, Rat>>>& objectives) {
  if (objectives.empty()) return solve_many(lp, {{}});
  return solve_many(lp, objectives);
}

bool lp_feasible(const LinearProgram& lp) {
  Prep prep = prepare(lp);
  if (prep.boundsCrossed) return false;
  return phase_one(prep.t);
}

}  // namespace honey

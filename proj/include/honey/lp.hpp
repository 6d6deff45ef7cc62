#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "honey/core.hpp"

namespace honey {

enum class LPStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

// One linear constraint: sum of terms (var index, coefficient) compared with
// rhs. rel: 0 means ==, 1 means >=, -1 means <=.
struct LPRow {
  std::vector<std::pair<int, Rat>> terms;
  Rat rhs;
  int rel = 0;
};

// Maximization problem over rational variables with optional box bounds.
// lo/hi may be left empty (no bounds anywhere) or sized exactly numVars.
struct LinearProgram {
  int numVars = 0;
  std::vector<std::optional<Rat>> lo, hi;
  std::vector<LPRow> rows;
  std::vector<std::pair<int, Rat>> objective;
};

struct LPResult {
  LPStatus status = LPStatus::INFEASIBLE;
  Rat value;                // valid when OPTIMAL
  std::vector<Rat> point;   // valid when OPTIMAL, sized numVars
};

// Exact two-phase simplex over bounded variables. Pricing uses Dantzig's rule
// with a Bland fallback after degenerate stalls, so runs are deterministic
// and terminate. Deterministic.
LPResult solve_lp(const LinearProgram& lp);

// Lexicographic maximization: maximizes objectives[0], then among its optima
// objectives[1], and so on, in one simplex run. The reported value is that of
// objectives[0]. The returned point is the unique lex-maximum when the
// objectives pin a single point of the feasible set.
LPResult solve_lp_lex(const LinearProgram& lp,
                      const std::vector<std::vector<std::pair<int, Rat>>>& objectives);

// Phase one only.
bool lp_feasible(const LinearProgram& lp);

}  // namespace honey

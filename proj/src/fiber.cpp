#include "honey/fiber.hpp"

#include <map>

namespace honey {

void FiberSystem::require_mutable() const {
  if (frozen_) throw InvariantError("fiber: mutation after freeze");
}

void FiberSystem::require_frozen() const {
  if (!frozen_) throw InvariantError("fiber: query before freeze");
}

int FiberSystem::add_slot() {
  require_mutable();
  int s = (int)parent_.size();
  parent_.push_back(s);
  toParent_.push_back(Rat(0));
  pinAtRoot_.push_back(std::nullopt);
  return s;
}

std::pair<int, Rat> FiberSystem::find(int s) const {
  if (s < 0 || s >= num_slots()) throw InvariantError("fiber: slot out of range");
  int r = s;
  Rat off = 0;
  while (parent_[(size_t)r] != r) {
    off += toParent_[(size_t)r];
    r = parent_[(size_t)r];
  }
  int cur = s;
  Rat rem = off;
  while (parent_[(size_t)cur] != cur) {
    int next = parent_[(size_t)cur];
    Rat step = toParent_[(size_t)cur];
    parent_[(size_t)cur] = r;
    toParent_[(size_t)cur] = rem;
    rem -= step;
    cur = next;
  }
  return {r, off};
}

void FiberSystem::require_offset(int s, int t, const Rat& off) {
  require_mutable();
  auto [rs, os] = find(s);
  auto [rt, ot] = find(t);
  if (rs == rt) {
    if (os != ot + off) infeasible_ = true;
    return;
  }
  Rat d = ot + off - os;  // val(rs) = val(rt) + d
  parent_[(size_t)rs] = rt;
  toParent_[(size_t)rs] = d;
  if (pinAtRoot_[(size_t)rs]) {
    Rat implied = *pinAtRoot_[(size_t)rs] - d;
    if (pinAtRoot_[(size_t)rt]) {
      if (*pinAtRoot_[(size_t)rt] != implied) infeasible_ = true;
    } else {
      pinAtRoot_[(size_t)rt] = implied;
    }
    pinAtRoot_[(size_t)rs].reset();
  }
}

void FiberSystem::pin_slot(int s, const Rat& v) {
  require_mutable();
  auto [r, off] = find(s);
  Rat v0 = v - off;
  if (pinAtRoot_[(size_t)r]) {
    if (*pinAtRoot_[(size_t)r] != v0) infeasible_ = true;
  } else {
    pinAtRoot_[(size_t)r] = v0;
  }
}

void FiberSystem::bound_slot(int s, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  require_mutable();
  if (s < 0 || s >= num_slots()) throw InvariantError("fiber: slot out of range");
  rawBounds_.push_back({s, lo, hi});
}

void FiberSystem::add_linear(const std::vector<std::pair<int, Rat>>& terms, const Rat& rhs,
                             bool isEq) {
  require_mutable();
  for (const auto& [s, coef] : terms) {
    (void)coef;
    if (s < 0 || s >= num_slots()) throw InvariantError("fiber: slot out of range");
  }
  rawRows_.push_back({terms, rhs, isEq});
}

void FiberSystem::freeze() {
  require_mutable();
  frozen_ = true;
  classOfRoot_.assign((size_t)num_slots(), -1);
  for (int s = 0; s < num_slots(); ++s) {
    auto [r, off] = find(s);
    (void)off;
    if (!pinAtRoot_[(size_t)r] && classOfRoot_[(size_t)r] < 0) {
      classOfRoot_[(size_t)r] = (int)classRoots_.size();
      classRoots_.push_back(r);
    }
  }
  clo_.assign(classRoots_.size(), std::nullopt);
  chi_.assign(classRoots_.size(), std::nullopt);
  for (const auto& rb : rawBounds_) {
    auto [r, off] = find(rb.slot);
    std::optional<Rat> lo = rb.lo ? std::optional<Rat>(*rb.lo - off) : std::nullopt;
    std::optional<Rat> hi = rb.hi ? std::optional<Rat>(*rb.hi - off) : std::nullopt;
    if (pinAtRoot_[(size_t)r]) {
      const Rat& v = *pinAtRoot_[(size_t)r];
      if ((lo && v < *lo) || (hi && v > *hi)) infeasible_ = true;
    } else {
      int c = classOfRoot_[(size_t)r];
      if (lo && (!clo_[(size_t)c] || *lo > *clo_[(size_t)c])) clo_[(size_t)c] = lo;
      if (hi && (!chi_[(size_t)c] || *hi < *chi_[(size_t)c])) chi_[(size_t)c] = hi;
    }
  }
  for (size_t c = 0; c < classRoots_.size(); ++c)
    if (clo_[c] && chi_[c] && *clo_[c] > *chi_[c]) infeasible_ = true;
  for (const auto& rr : rawRows_) {
    LinExpr ex = class_expr(rr.terms);
    Rat rhs = rr.rhs - ex.constant;
    if (ex.terms.empty()) {
      if (rr.isEq ? (rhs != 0) : (rhs > 0)) infeasible_ = true;
      continue;
    }
    classRows_.push_back({std::move(ex.terms), rhs, rr.isEq ? 0 : 1});
  }
}

bool FiberSystem::feasible() const {
  require_frozen();
  return !infeasible_;
}

int FiberSystem::num_classes() const {
  require_frozen();
  return (int)classRoots_.size();
}

LinExpr FiberSystem::class_expr(const std::vector<std::pair<int, Rat>>& slotTerms) const {
  require_frozen();
  std::map<int, Rat> acc;
  Rat constant = 0;
  for (const auto& [s, coef] : slotTerms) {
    auto [r, off] = find(s);
    constant += coef * off;
    if (pinAtRoot_[(size_t)r])
      constant += coef * *pinAtRoot_[(size_t)r];
    else
      acc[classOfRoot_[(size_t)r]] += coef;
  }
  LinExpr ex;
  ex.constant = constant;
  for (const auto& [c, v] : acc)
    if (v != 0) ex.terms.push_back({c, v});
  return ex;
}

LinearProgram FiberSystem::to_lp() const {
  require_frozen();
  if (infeasible_) throw InvariantError("fiber: to_lp on an infeasible system");
  LinearProgram lp;
  lp.numVars = (int)classRoots_.size();
  lp.lo = clo_;
  lp.hi = chi_;
  lp.rows = classRows_;
  return lp;
}

std::vector<Rat> FiberSystem::slots_from_point(const std::vector<Rat>& classPoint) const {
  require_frozen();
  if ((int)classPoint.size() != (int)classRoots_.size())
    throw InvariantError("fiber: class point has wrong size");
  std::vector<Rat> out((size_t)num_slots());
  for (int s = 0; s < num_slots(); ++s) {
    auto [r, off] = find(s);
    if (pinAtRoot_[(size_t)r])
      out[(size_t)s] = *pinAtRoot_[(size_t)r] + off;
    else
      out[(size_t)s] = classPoint[(size_t)classOfRoot_[(size_t)r]] + off;
  }
  return out;
}

Int FiberSystem::enumerate_integral(
    const std::function<bool(const std::vector<Rat>&)>& visit) const {
  require_frozen();
  if (infeasible_) return 0;

  // A slot is integral iff its class value (or pin) plus offset is integral,
  // so any non-integer offset or pin empties the integral fiber.
  struct SlotRef {
    bool pinned;
    Rat base;
    int cls;
  };
  std::vector<SlotRef> refs((size_t)num_slots());
  for (int s = 0; s < num_slots(); ++s) {
    auto [r, off] = find(s);
    if (pinAtRoot_[(size_t)r]) {
      Rat v = *pinAtRoot_[(size_t)r] + off;
      if (!is_integer(v)) return 0;
      refs[(size_t)s] = {true, v, -1};
    } else {
      if (!is_integer(off)) return 0;
      refs[(size_t)s] = {false, off, classOfRoot_[(size_t)r]};
    }
  }

  int K = (int)classRoots_.size();
  std::vector<std::optional<Rat>> lo((size_t)K), hi((size_t)K);
  for (int c = 0; c < K; ++c) {
    if (clo_[(size_t)c]) lo[(size_t)c] = Rat(rat_ceil(*clo_[(size_t)c]));
    if (chi_[(size_t)c]) hi[(size_t)c] = Rat(rat_floor(*chi_[(size_t)c]));
  }

  // Interval propagation over the rows, tightening to integers. Bounds only
  // ratchet inward; with finite boxes this reaches a fixpoint.
  auto propagate = [&](std::vector<std::optional<Rat>>& l,
                       std::vector<std::optional<Rat>>& h) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& row : classRows_) {
        for (size_t k = 0; k < row.terms.size(); ++k) {
          bool restLoFin = true, restHiFin = true;
          Rat restLo = 0, restHi = 0;
          for (size_t m = 0; m < row.terms.size(); ++m) {
            if (m == k) continue;
            const auto& [c, a] = row.terms[m];
            if (a > 0) {
              if (l[(size_t)c]) restLo += a * *l[(size_t)c]; else restLoFin = false;
              if (h[(size_t)c]) restHi += a * *h[(size_t)c]; else restHiFin = false;
            } else {
              if (h[(size_t)c]) restLo += a * *h[(size_t)c]; else restLoFin = false;
              if (l[(size_t)c]) restHi += a * *l[(size_t)c]; else restHiFin = false;
            }
          }
          const auto& [ck, ak] = row.terms[k];
          auto boundBelow = [&](const Rat& bound) {  // ak * v[ck] >= bound
            Rat q = bound / ak;
            if (ak > 0) {
              Rat t = Rat(rat_ceil(q));
              if (!l[(size_t)ck] || t > *l[(size_t)ck]) { l[(size_t)ck] = t; changed = true; }
            } else {
              Rat t = Rat(rat_floor(q));
              if (!h[(size_t)ck] || t < *h[(size_t)ck]) { h[(size_t)ck] = t; changed = true; }
            }
          };
          auto boundAbove = [&](const Rat& bound) {  // ak * v[ck] <= bound
            Rat q = bound / ak;
            if (ak > 0) {
              Rat t = Rat(rat_floor(q));
              if (!h[(size_t)ck] || t < *h[(size_t)ck]) { h[(size_t)ck] = t; changed = true; }
            } else {
              Rat t = Rat(rat_ceil(q));
              if (!l[(size_t)ck] || t > *l[(size_t)ck]) { l[(size_t)ck] = t; changed = true; }
            }
          };
          if (restHiFin) boundBelow(row.rhs - restHi);
          if (row.rel == 0 && restLoFin) boundAbove(row.rhs - restLo);
        }
      }
      for (int c = 0; c < K; ++c)
        if (l[(size_t)c] && h[(size_t)c] && *l[(size_t)c] > *h[(size_t)c]) return false;
    }
    return true;
  };

  if (!propagate(lo, hi)) return 0;
  for (int c = 0; c < K; ++c)
    if (!lo[(size_t)c] || !hi[(size_t)c])
      throw InvariantError("fiber: class without finite bounds in integral enumeration");

  Int count = 0;
  bool stop = false;
  std::vector<Rat> slotVals((size_t)num_slots());
  std::function<void(std::vector<std::optional<Rat>>, std::vector<std::optional<Rat>>)> dfs =
      [&](std::vector<std::optional<Rat>> l, std::vector<std::optional<Rat>> h) {
        if (stop) return;
        int pick = -1;
        Rat width;
        for (int c = 0; c < K; ++c) {
          Rat w = *h[(size_t)c] - *l[(size_t)c];
          if (w > 0 && (pick < 0 || w < width)) {
            pick = c;
            width = w;
          }
        }
        if (pick < 0) {
          for (const auto& row : classRows_) {
            Rat sum = 0;
            for (const auto& [c, a] : row.terms) sum += a * *l[(size_t)c];
            if (row.rel == 0 ? (sum != row.rhs) : (sum < row.rhs)) return;
          }
          count += 1;
          for (int s = 0; s < num_slots(); ++s) {
            const SlotRef& ref = refs[(size_t)s];
            slotVals[(size_t)s] = ref.pinned ? ref.base : ref.base + *l[(size_t)ref.cls];
          }
          if (!visit(slotVals)) stop = true;
          return;
        }
        Rat from = *l[(size_t)pick], to = *h[(size_t)pick];
        for (Rat v = from; v <= to; v += 1) {
          auto l2 = l;
          auto h2 = h;
          l2[(size_t)pick] = v;
          h2[(size_t)pick] = v;
          if (propagate(l2, h2)) dfs(std::move(l2), std::move(h2));
          if (stop) return;
        }
      };
  dfs(lo, hi);
  return count;
}

}  // namespace honey

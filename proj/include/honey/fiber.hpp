#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "honey/core.hpp"
#include "honey/lp.hpp"

namespace honey {

// Linear expression over frozen class variables plus a constant.
struct LinExpr {
  std::vector<std::pair<int, Rat>> terms;
  Rat constant;
};

// A system of scalar slots related by affine identifications (val(s) =
// val(t) + off), pins, box bounds and general linear rows. This is the shared
// engine behind honeycomb fibers: slots are vertex coordinates,
// identifications come from edges keeping a coordinate constant, pins from
// boundary data, rows from plane equations and edge lengths.
//
// Usage: add slots and constraints, freeze(), then either enumerate the
// integral points of the fiber or export a LinearProgram over the remaining
// classes. Identification conflicts and violated constant rows mark the
// system infeasible instead of throwing.
class FiberSystem {
 public:
  int add_slot();
  int num_slots() const { return (int)parent_.size(); }

  void require_offset(int s, int t, const Rat& off);  // val(s) = val(t) + off
  void pin_slot(int s, const Rat& v);
  void bound_slot(int s, const std::optional<Rat>& lo, const std::optional<Rat>& hi);
  // sum(terms) == rhs when isEq, else sum(terms) >= rhs
  void add_linear(const std::vector<std::pair<int, Rat>>& terms, const Rat& rhs, bool isEq);

  void freeze();
  bool frozen() const { return frozen_; }
  bool feasible() const;
  int num_classes() const;

  // Translates a slot-level linear expression into class terms + constant.
  LinExpr class_expr(const std::vector<std::pair<int, Rat>>& slotTerms) const;
  LinearProgram to_lp() const;
  std::vector<Rat> slots_from_point(const std::vector<Rat>& classPoint) const;

  // Enumerates every assignment in which all slots take integer values,
  // calling visit with the full slot vector. visit returns false to stop
  // early. Returns the number of assignments visited. Requires every class to
  // acquire finite bounds. Deterministic order.
  Int enumerate_integral(const std::function<bool(const std::vector<Rat>&)>& visit) const;

 private:
  std::pair<int, Rat> find(int s) const;
  void require_mutable() const;
  void require_frozen() const;

  mutable std::vector<int> parent_;
  mutable std::vector<Rat> toParent_;
  std::vector<std::optional<Rat>> pinAtRoot_;
  struct RawBound {
    int slot;
    std::optional<Rat> lo, hi;
  };
  std::vector<RawBound> rawBounds_;
  struct RawRow {
    std::vector<std::pair<int, Rat>> terms;
    Rat rhs;
    bool isEq;
  };
  std::vector<RawRow> rawRows_;
  bool infeasible_ = false;
  bool frozen_ = false;

  std::vector<int> classOfRoot_;
  std::vector<int> classRoots_;
  std::vector<std::optional<Rat>> clo_, chi_;
  std::vector<LPRow> classRows_;  // rel 0 or 1 only
};

}  // namespace honey

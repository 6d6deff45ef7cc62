#include "honey/lift.hpp"

#include <utility>

#include "honey/lp.hpp"

namespace honey {

namespace {

// Linear form in fiber slots plus a constant, used to express edge lengths
// and perimeters inside the fiber LP.
struct SlotAffine {
  std::vector<std::pair<int, Rat>> terms;
  Rat constant;
};

void add_length_terms(const MoebiusFiber& fiber, const EdgeId& e, const Rat& coeff,
                      SlotAffine& out) {
  const int n = fiber.n();
  switch (e.type) {
    case EType::N:
      out.terms.emplace_back(fiber.slot({VKind::A, e.i, e.j}, 0), coeff);
      out.terms.emplace_back(fiber.slot({VKind::B, e.i, e.j}, 0), -coeff);
      break;
    case EType::SW:
      out.terms.emplace_back(fiber.slot({VKind::B, e.i - 1, e.j}, 0), coeff);
      out.terms.emplace_back(fiber.slot({VKind::A, e.i, e.j}, 0), -coeff);
      break;
    case EType::SE:
      if (e.j >= 2) {
        out.terms.emplace_back(fiber.slot({VKind::B, e.i - 1, e.j - 1}, 2), coeff);
        out.terms.emplace_back(fiber.slot({VKind::A, e.i, e.j}, 2), -coeff);
      } else {
        out.terms.emplace_back(fiber.slot({VKind::A, n - e.i + 1, 2 * n - e.i + 1}, 2), coeff);
        out.terms.emplace_back(fiber.slot({VKind::A, e.i, 1}, 2), -coeff);
        out.constant += coeff * Rat(3) * fiber.delta();
      }
      break;
  }
}

SlotAffine perimeter_form(const MoebiusFiber& fiber, const HexId& hex) {
  SlotAffine out;
  for (const EdgeId& e : hex_edges(fiber.n(), hex)) add_length_terms(fiber, e, Rat(1), out);
  return out;
}

HexId fold_hex(int n, const HexId& hex, const char* what) {
  auto folded = canonical_hex(n, hex.i, hex.j);
  if (!folded) throw InputError(std::string(what) + ": not an interior face");
  return *folded;
}

}  // namespace

Rat edge_length(const MoebiusHoneycomb& h, const EdgeId& e) {
  EdgeId c = canonical_edge(h.n, e.type, e.i, e.j);
  const BPoint& a = h.pos.at({VKind::A, c.i, c.j});
  switch (c.type) {
    case EType::N:
      return a.x - h.pos.at({VKind::B, c.i, c.j}).x;
    case EType::SW:
      return h.pos.at({VKind::B, c.i - 1, c.j}).x - a.x;
    case EType::SE:
    default:
      return reconstruct(h, VKind::B, c.i - 1, c.j - 1).z - a.z;
  }
}

Rat const_coord(const MoebiusHoneycomb& h, const EdgeId& e) {
  EdgeId c = canonical_edge(h.n, e.type, e.i, e.j);
  const BPoint& a = h.pos.at({VKind::A, c.i, c.j});
  switch (c.type) {
    case EType::N:
      return a.z;
    case EType::SW:
      return a.y;
    case EType::SE:
    default:
      return a.x;
  }
}

Rat total_length(const MoebiusHoneycomb& h) {
  Rat sum;
  for (const EdgeId& e : moebius_edges(h.n)) sum += edge_length(h, e);
  return sum;
}

Rat perimeter(const MoebiusHoneycomb& h, const HexId& hex) {
  HexId c = fold_hex(h.n, hex, "perimeter");
  Rat sum;
  for (const EdgeId& e : hex_edges(h.n, c)) sum += edge_length(h, e);
  return sum;
}

Rat hex_alternating_const_sum(const MoebiusHoneycomb& h, const HexId& hex) {
  HexId c = fold_hex(h.n, hex, "hex_alternating_const_sum");
  BPoint p0 = reconstruct(h, VKind::A, c.i, c.j);
  BPoint p1 = reconstruct(h, VKind::A, c.i + 1, c.j + 1);
  BPoint p2 = reconstruct(h, VKind::A, c.i, c.j + 1);
  return -p0.y + p0.z - p1.x + p1.y - p2.z + p2.x;
}

IotaImage iota(const MoebiusHoneycomb& h) {
  IotaImage img;
  for (const HexId& hex : moebius_hexagons(h.n)) img.perimeters[hex] = perimeter(h, hex);
  img.xi = boundary_mh(h);
  return img;
}

HexWeights make_weights(int n) {
  HexWeights out;
  std::vector<HexId> hexes = moebius_hexagons(n);
  if (hexes.empty()) return out;
  // The perturbation stays below the slack of the strict mean condition (at
  // least 4 for base weights i(n-i)) and keeps all weights distinct.
  Rat eta(1, 24 * static_cast<long long>(hexes.size()));
  long long idx = 0;
  for (const HexId& hex : hexes) {
    ++idx;
    out.w[hex] = Rat(static_cast<long long>(hex.i) * (n - hex.i)) + eta * Rat(idx);
  }
  return out;
}

Rat wperim(const MoebiusHoneycomb& h, const HexWeights& w) {
  Rat sum;
  for (const auto& [hex, weight] : w.w) sum += weight * perimeter(h, hex);
  return sum;
}

LargestLift largest_lift(const std::vector<Rat>& xi, const Rat& delta, int n) {
  MoebiusFiber fiber(xi, delta, n);
  if (!fiber.system().feasible()) throw InputError("largest_lift: infeasible boundary");
  LinearProgram lp = fiber.system().to_lp();

  LargestLift out;
  HexWeights weights = make_weights(n);

  // One lexicographic maximization: the weighted perimeter first, then each
  // face perimeter in the fixed face order.
  SlotAffine weighted;
  for (const auto& [hex, weight] : weights.w) {
    for (const EdgeId& e : hex_edges(n, hex)) add_length_terms(fiber, e, weight, weighted);
  }
  std::vector<std::vector<std::pair<int, Rat>>> objectives;
  objectives.push_back(fiber.system().class_expr(weighted.terms).terms);
  out.stages.push_back("wperim");
  for (const HexId& hex : moebius_hexagons(n)) {
    objectives.push_back(fiber.system().class_expr(perimeter_form(fiber, hex).terms).terms);
    out.stages.push_back(hex.label());
  }

  LPResult r = solve_lp_lex(lp, objectives);
  if (r.status == LPStatus::INFEASIBLE) throw InputError("largest_lift: infeasible boundary");
  if (r.status != LPStatus::OPTIMAL) throw InvariantError("largest_lift: maximization failed");

  out.honeycomb = fiber.from_slots(fiber.system().slots_from_point(r.point));
  if (!validate_mh(out.honeycomb))
    throw InvariantError("largest_lift: result failed validation");
  out.image = iota(out.honeycomb);
  out.weightedPerimeter = wperim(out.honeycomb, weights);
  return out;
}

std::optional<MoebiusHoneycomb> honeycomb_from_iota(const IotaImage& img, const Rat& delta,
                                                    int n) {
  MoebiusFiber fiber(img.xi, delta, n);
  if (!fiber.system().feasible()) return std::nullopt;
  LinearProgram lp = fiber.system().to_lp();
  for (const HexId& hex : moebius_hexagons(n)) {
    auto it = img.perimeters.find(hex);
    if (it == img.perimeters.end()) throw InputError("honeycomb_from_iota: missing face");
    SlotAffine form = perimeter_form(fiber, hex);
    LinExpr ex = fiber.system().class_expr(form.terms);
    lp.rows.push_back({ex.terms, it->second - form.constant - ex.constant, 0});
  }
  lp.objective.clear();
  LPResult r = solve_lp(lp);
  if (r.status != LPStatus::OPTIMAL) return std::nullopt;
  MoebiusHoneycomb h = fiber.from_slots(fiber.system().slots_from_point(r.point));
  if (!validate_mh(h)) throw InvariantError("honeycomb_from_iota: result failed validation");
  return h;
}

std::optional<MoebiusHoneycomb> inflate_hexagon(const MoebiusHoneycomb& h, const HexId& hex,
                                                const Rat& eps) {
  require_valid_mh(h, "inflate_hexagon");
  HexId c = fold_hex(h.n, hex, "inflate_hexagon");
  if (eps < 0) throw InputError("inflate_hexagon: negative amount");
  if (eps == 0) return h;

  IotaImage img = iota(h);
  img.perimeters[c] += Rat(6) * eps;
  for (const auto& nb : hex_neighbors(h.n, c)) {
    if (nb) img.perimeters[*nb] -= eps;
  }
  return honeycomb_from_iota(img, h.delta, h.n);
}

bool is_inflatable(const MoebiusHoneycomb& h, const HexId& hex) {
  require_valid_mh(h, "is_inflatable");
  HexId c = fold_hex(h.n, hex, "is_inflatable");

  MoebiusFiber fiber(boundary_mh(h), h.delta, h.n);
  LinearProgram lp = fiber.system().to_lp();
  int tVar = lp.numVars++;
  if (static_cast<int>(lp.lo.size()) < lp.numVars) lp.lo.resize(lp.numVars);
  if (static_cast<int>(lp.hi.size()) < lp.numVars) lp.hi.resize(lp.numVars);
  lp.lo[tVar] = Rat(0);

  std::map<HexId, Rat> drift;
  drift[c] += Rat(6);
  for (const auto& nb : hex_neighbors(h.n, c)) {
    if (nb) drift[*nb] -= Rat(1);
  }
  for (const HexId& hx : moebius_hexagons(h.n)) {
    SlotAffine form = perimeter_form(fiber, hx);
    LinExpr ex = fiber.system().class_expr(form.terms);
    auto it = drift.find(hx);
    if (it != drift.end()) ex.terms.emplace_back(tVar, -it->second);
    lp.rows.push_back({ex.terms, perimeter(h, hx) - form.constant - ex.constant, 0});
  }
  lp.objective = {{tVar, Rat(1)}};
  LPResult r = solve_lp(lp);
  if (r.status == LPStatus::INFEASIBLE)
    throw InvariantError("is_inflatable: fiber lost the base point");
  return r.status == LPStatus::UNBOUNDED || r.value > 0;
}

}  // namespace honey

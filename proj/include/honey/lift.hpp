#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "honey/moebius.hpp"

namespace honey {

// Length of the edge's image, the factor relating head minus tail to the
// edge's unit direction. Folds e to its listed representative first.
Rat edge_length(const MoebiusHoneycomb& h, const EdgeId& e);

// The coordinate kept constant along the edge's image, read at the listed
// representative (x for southeast, y for southwest, z for north edges).
Rat const_coord(const MoebiusHoneycomb& h, const EdgeId& e);

// Sum of all quotient edge lengths; depends only on the boundary (half the
// boundary total).
Rat total_length(const MoebiusHoneycomb& h);

// Sum of the six side lengths of a hexagonal face.
Rat perimeter(const MoebiusHoneycomb& h, const HexId& hex);

// Alternating sum of the six side constants, read locally at the developed
// corners of the face. Always equals the perimeter.
Rat hex_alternating_const_sum(const MoebiusHoneycomb& h, const HexId& hex);

// Perimeters of all faces plus the boundary: an injective linear image that
// pins a honeycomb uniquely.
struct IotaImage {
  std::map<HexId, Rat> perimeters;
  std::vector<Rat> xi;
  bool operator==(const IotaImage&) const = default;
};
IotaImage iota(const MoebiusHoneycomb& h);

// Face weights used by the lift objective: base weight i(n-i) plus a tiny
// deterministic perturbation keeping every face strictly above the mean of
// its neighbors and making all weights pairwise distinct.
struct HexWeights {
  std::map<HexId, Rat> w;
};
HexWeights make_weights(int n);

// Weighted perimeter sum.
Rat wperim(const MoebiusHoneycomb& h, const HexWeights& w);

// The unique honeycomb over xi maximizing the weighted perimeter, with ties
// broken by lexicographically maximizing face perimeters in row-major order.
// stages records the objective order used.
struct LargestLift {
  MoebiusHoneycomb honeycomb;
  IotaImage image;
  Rat weightedPerimeter;
  std::vector<std::string> stages;
};
LargestLift largest_lift(const std::vector<Rat>& xi, const Rat& delta, int n);

// Unique honeycomb with the given perimeters and boundary, if one exists.
std::optional<MoebiusHoneycomb> honeycomb_from_iota(const IotaImage& img, const Rat& delta,
                                                    int n);

// Honeycomb whose face perimeters differ from h's by +6*eps at hex and -eps
// per shared side with each neighboring face. Infeasibility is a normal
// outcome (nullopt); eps = 0 returns h unchanged.
std::optional<MoebiusHoneycomb> inflate_hexagon(const MoebiusHoneycomb& h, const HexId& hex,
                                                const Rat& eps);

// True iff inflate_hexagon succeeds for some eps > 0.
bool is_inflatable(const MoebiusHoneycomb& h, const HexId& hex);

}  // namespace honey

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "honey/fiber.hpp"
#include "honey/honeycomb.hpp"
#include "honey/tinkertoy.hpp"

namespace honey {

// Moebius honeycomb: positions for the window vertices (rows 0..n, columns
// 1..n+i, both kinds) plus the scale delta. Positions of all other strip
// vertices follow from the seam and period identifications (reconstruct).
struct MoebiusHoneycomb {
  int n = 0;
  Rat delta;
  std::map<VertexId, BPoint> pos;
  bool operator==(const MoebiusHoneycomb&) const = default;
};

// Seam maps. S sends the position of a strip vertex to the position of its
// partner of the other kind one seam step away; T is the inverse.
BPoint seam_S(const BPoint& p, const Rat& delta);
BPoint seam_T(const BPoint& p, const Rat& delta);

// Position of an arbitrary strip vertex, developed from the window through
// seam and period identifications. Requires 0 <= i <= n; j unrestricted.
BPoint reconstruct(const MoebiusHoneycomb& h, VKind kind, int i, int j);

// True iff the window data satisfies all plane, edge, wrap, pin and boundary
// range conditions. Structural defects (wrong key set, nonpositive n or
// delta) throw InputError instead.
bool validate_mh(const MoebiusHoneycomb& h);

// Like validate_mh but throws InputError describing the first violation.
void require_valid_mh(const MoebiusHoneycomb& h, const std::string& what);

// All window coordinates integral and delta integral, so every reconstructed
// vertex is a lattice point.
bool is_integral(const MoebiusHoneycomb& h);

// Boundary values xi_1..xi_3n, the z-coordinates of the row-0 strip vertices.
std::vector<Rat> boundary_mh(const MoebiusHoneycomb& h);

// Boundary vector (lambda_1+4d, .., lambda_n+4d, mu_1+2d, .., mu_n+2d,
// nu_1, .., nu_n). Requires delta >= all parts (the admissibility condition).
std::vector<Rat> xi_from_partitions(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, long long delta, int n);

// c1*h1 + c2*h2 with c1, c2 >= 0 and c1 + c2 > 0; inputs must be valid at a
// common n and delta. The result is valid at scale (c1+c2)*delta.
MoebiusHoneycomb combine(const Rat& c1, const MoebiusHoneycomb& h1, const Rat& c2,
                         const MoebiusHoneycomb& h2);

// The fiber of Moebius honeycombs over a fixed boundary vector.
class MoebiusFiber {
 public:
  MoebiusFiber(const std::vector<Rat>& xi, const Rat& delta, int n);

  int n() const { return n_; }
  const Rat& delta() const { return delta_; }
  int slot(const VertexId& window, int axis) const;
  const FiberSystem& system() const { return fs_; }
  MoebiusHoneycomb from_slots(const std::vector<Rat>& slotVals) const;

  Int enumerate(const std::function<bool(const MoebiusHoneycomb&)>& visit) const;
  Int count() const;

 private:
  int n_;
  Rat delta_;
  FiberSystem fs_;
  std::map<VertexId, int> base_;
};

// Number of integral Moebius honeycombs with boundary
// xi_from_partitions(lambda, mu, nu, delta, n). Rejects inadmissible delta.
Int count_nl(const Partition& lambda, const Partition& mu, const Partition& nu,
             long long delta, int n);
// delta = max(1, largest part), n = max(1, partition lengths).
Int count_nl(const Partition& lambda, const Partition& mu, const Partition& nu);

// Assembles a Moebius honeycomb from three triangular honeycombs whose
// boundaries interlock as (lambda; beta, gamma), (mu; gamma, alpha),
// (nu; alpha, beta). Requires delta >= all parts of lambda, mu, nu.
MoebiusHoneycomb glue(const GLHoneycomb& hl, const GLHoneycomb& hm, const GLHoneycomb& hn,
                      const Rat& delta);

// Inverse of glue on valid integral honeycombs.
struct SplitResult {
  GLHoneycomb lambdaPiece, muPiece, nuPiece;
  Partition alpha, beta, gamma;
};
SplitResult split(const MoebiusHoneycomb& h);

}  // namespace honey

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "honey/lift.hpp"
#include "honey/moebius.hpp"
#include "honey/tinkertoy.hpp"

namespace honey {

// Black/white classification induced by a honeycomb: a vertex class is white
// when its position has a non-integer coordinate, an edge when its constant
// coordinate is non-integer. Both notions are independent of the
// representative chosen, since crossing the seam shifts positions by integer
// multiples of delta once delta is an integer.
struct Coloring {
  std::set<QV> whiteVertices;
  std::set<EdgeId> whiteEdges;

  bool vertex_white(const QV& v) const { return whiteVertices.count(v) > 0; }
  bool edge_white(const EdgeId& e) const { return whiteEdges.count(e) > 0; }
};

Coloring color(const MoebiusHoneycomb& h);

enum class VertexType { Boundary, Y, Crossing, Rake, FiveValent, SixValent };

// Quotient graph with every degenerate (zero-length) edge contracted and
// parallel surviving edges merged with multiplicities. Each cluster keeps its
// member classes, the degenerate edges inside it, and its incident surviving
// edges with the outgoing direction transported into the frame of the
// smallest member (crossing the seam swaps the direction's x and y). Clusters
// touching the strip boundary are typed Boundary; all others classify by the
// multiset of incident directions.
struct ContractedGraph {
  struct Side {
    EdgeId edge;
    QV member;   // cluster member the edge attaches to
    Ray anchor;  // outgoing direction in the cluster frame
  };
  struct Cluster {
    std::vector<QV> members;            // sorted; members[0] anchors the frame
    std::vector<EdgeId> internalEdges;  // contracted degenerate edges, sorted
    std::vector<Side> sides;            // incident surviving edges, sorted
    VertexType type = VertexType::Y;
    bool white = false;
  };
  struct MultiEdge {
    int u = 0, v = 0;             // cluster indices, u <= v
    std::vector<EdgeId> members;  // parallel surviving edges, sorted
    bool white = false;
  };

  int n = 0;
  std::vector<Cluster> clusters;
  std::vector<MultiEdge> edges;
  std::map<QV, int> rho;  // vertex class -> cluster index

  const Cluster& cluster_of(const QV& v) const { return clusters[(size_t)rho.at(v)]; }
};

ContractedGraph contract(const MoebiusHoneycomb& h, const Coloring& c);

// Closed walk through white edges: at each white vertex it continues along
// the other white edge, threading white degenerate edges through their
// clusters, except at a crossing reached on a non-degenerate edge, where it
// goes straight through the black internal degenerate edge instead of
// bending. edges[k] joins vertices[k] to vertices[(k+1) % size]; crossings
// lists the threaded crossing clusters. canonical records that no edge
// repeats; a walk is orientable iff its edge count is even.
struct WhiteLoop {
  struct CrossingUse {
    int cluster = 0;
    EdgeId internalEdge;
    int edgeIndex = 0;  // position of internalEdge within edges
  };
  std::vector<QV> vertices;
  std::vector<EdgeId> edges;
  std::vector<CrossingUse> crossings;
  bool canonical = true;
  bool orientable = false;
};

// All white loops of a largest lift, each white edge covered exactly once.
// Checks the structure the lift guarantees (half-integer coordinates, white
// vertices on half-lattice points and off the boundary, two white edges per
// white vertex, no six-valent white cluster, no white multi-edge, no
// crossing threaded by a white edge) and throws InvariantError when any
// check fails.
std::vector<WhiteLoop> white_loops(const MoebiusHoneycomb& h, const ContractedGraph& g,
                                   const Coloring& c);

// A closed walk in the quotient graph is orientable iff its edge count is
// even. The vertex-sequence form expects a closed walk (front == back) with
// consecutive entries adjacent, and throws InputError otherwise.
bool is_orientable(int n, const std::vector<QV>& vertices);
bool is_orientable(const WhiteLoop& loop);

// Edge shift amounts; absent edges carry zero.
struct PhiAssignment {
  std::map<EdgeId, Rat> phi;

  Rat at(const EdgeId& e) const;
  void add(const EdgeId& e, const Rat& v);
};

// Honeycomb with every edge constant shifted by phi. Requires the shifts to
// balance to zero at each vertex class (boundary preservation) and all
// shifted edge lengths to stay nonnegative; violations name the offending
// vertex or edge.
MoebiusHoneycomb apply_phi(const MoebiusHoneycomb& h, const PhiAssignment& phi);

// Adds the alternating half-integer pattern along two intersecting
// non-orientable loops, anchored at the internal edge of the first crossing
// they share; the two loops run through it in opposite directions so the
// shifts balance. Returns the anchor edge.
EdgeId double_break(const MoebiusHoneycomb& h, const WhiteLoop& a, const WhiteLoop& b,
                    PhiAssignment& phi);

// Repairs the local patterns (half-size white triangles) where the doubled
// breaks would push an edge length negative, by flipping the triangle's
// white shifts and releasing the three surrounding degenerate edges. One
// sweep must reach a fixed point.
void sixfold_break(const MoebiusHoneycomb& h, const Coloring& c, PhiAssignment& phi);

struct LoopPairing {
  int first = 0;
  int second = 0;
  EdgeId sharedEdge;
};

struct IntegralizeResult {
  MoebiusHoneycomb honeycomb;
  PhiAssignment phi;
  std::vector<WhiteLoop> loops;
  std::vector<LoopPairing> pairings;
};

// Integral honeycomb with the same boundary as h, built by pairing canonical
// white loops, double-breaking each pair, repairing triangles, and applying
// the shifts. Requires an integral boundary with even sum, integer delta,
// and h a largest lift (detected through its half-integer structure).
IntegralizeResult integralize(const MoebiusHoneycomb& h);

struct SaturationResult {
  MoebiusHoneycomb witness;
  IntegralizeResult breaking;
  long long k = 1;
  long long delta = 1;
  int n = 1;
};

// Constructive saturation: when the scaled triple (k*lambda, k*mu, k*nu)
// admits an integral honeycomb, produces one for (lambda, mu, nu) itself by
// scaling a scaled witness down, lifting its boundary, and integralizing.
// Returns nullopt exactly when the scaled count is zero. The total weight
// |lambda| + |mu| + |nu| must be even.
std::optional<SaturationResult> saturation_witness(const Partition& lambda,
                                                   const Partition& mu, const Partition& nu,
                                                   long long k, int n = 0);

}  // namespace honey

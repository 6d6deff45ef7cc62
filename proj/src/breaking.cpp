#include "honey/breaking.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "honey/core.hpp"

namespace honey {

namespace {

// Canonical edge listing grouped by vertex class. Each entry's ray points
// away from the vertex, expressed in that vertex's window frame.
struct IncidentEdge {
  EdgeId edge;
  Ray ray;
};

struct QuotientIncidence {
  int n = 0;
  std::vector<EdgeId> edges;
  std::map<QV, std::vector<IncidentEdge>> at;
  std::map<std::pair<QV, QV>, std::vector<EdgeId>> between;

  explicit QuotientIncidence(int nn) : n(nn), edges(moebius_edges(nn)) {
    for (const EdgeId& e : edges) {
      const auto sides = edge_sides(n, e);
      const QV q0 = qv_of_window(n, sides[0].window);
      const QV q1 = qv_of_window(n, sides[1].window);
      at[q0].push_back({e, sides[0].ray});
      at[q1].push_back({e, sides[1].ray});
      between[q0 < q1 ? std::make_pair(q0, q1) : std::make_pair(q1, q0)].push_back(e);
    }
  }

  const std::vector<EdgeId>* joining(const QV& u, const QV& v) const {
    auto it = between.find(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    return it == between.end() ? nullptr : &it->second;
  }
};

bool integral_point(const BPoint& p) {
  return is_integer(p.x) && is_integer(p.y) && is_integer(p.z);
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(size_t count) : parent(count) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Local type of an interior cluster from the multiset of its side directions,
// all transported to the frame of the least member. Rejects any multiset
// whose directions do not cancel.
VertexType classify_interior(const std::vector<ContractedGraph::Side>& sides, const QV& at) {
  std::map<Ray, int> cnt;
  for (const auto& s : sides) cnt[s.anchor]++;
  const std::array<Ray, 6> units = {kE1, kE2, kE3, -kE1, -kE2, -kE3};
  for (const auto& [r, k] : cnt)
    if (std::find(units.begin(), units.end(), r) == units.end())
      throw InvariantError("contract: side direction is not a unit ray at " + at.label());
  auto c = [&](const Ray& r) {
    auto it = cnt.find(r);
    return it == cnt.end() ? 0 : it->second;
  };
  const int a = c(kE1), b = c(kE2), cc = c(kE3);
  const int d = c(-kE1), f = c(-kE2), g = c(-kE3);
  if (a - d != b - f || b - f != cc - g)
    throw InvariantError("contract: unbalanced side directions at " + at.label());
  const int support = (a > 0) + (b > 0) + (cc > 0) + (d > 0) + (f > 0) + (g > 0);
  const int pairs = (a > 0 && d > 0) + (b > 0 && f > 0) + (cc > 0 && g > 0);
  switch (support) {
    case 3:
      if (pairs == 0) return VertexType::Y;
      break;
    case 4:
      if (pairs == 2) return VertexType::Crossing;
      if (pairs == 1) return VertexType::Rake;
      break;
    case 5:
      return VertexType::FiveValent;
    case 6:
      return VertexType::SixValent;
    default:
      break;
  }
  throw InvariantError("contract: vertex matches no local type at " + at.label());
}

// Shifts every window coordinate by the assignment on its axis edge, without
// any validation. Callers decide which checks apply.
MoebiusHoneycomb shift_positions(const MoebiusHoneycomb& h, const PhiAssignment& phi) {
  MoebiusHoneycomb out = h;
  for (auto& [vid, p] : out.pos) {
    const auto axes = window_incidence(h.n, vid);
    for (int axis = 0; axis < 3; ++axis)
      if (axes[axis]) p.coord(axis) += phi.at(*axes[axis]);
  }
  return out;
}

WhiteLoop rotate_loop(const WhiteLoop& loop, size_t t) {
  const size_t sz = loop.edges.size();
  WhiteLoop out;
  out.vertices.resize(sz);
  out.edges.resize(sz);
  for (size_t k = 0; k < sz; ++k) {
    out.vertices[k] = loop.vertices[(t + k) % sz];
    out.edges[k] = loop.edges[(t + k) % sz];
  }
  out.canonical = false;
  out.orientable = loop.orientable;
  return out;
}

WhiteLoop reflect_loop(const WhiteLoop& loop) {
  const size_t sz = loop.edges.size();
  WhiteLoop out;
  out.vertices.resize(sz);
  out.edges.resize(sz);
  for (size_t k = 0; k < sz; ++k) {
    out.vertices[k] = loop.vertices[(sz - k) % sz];
    out.edges[k] = loop.edges[sz - 1 - k];
  }
  out.canonical = false;
  out.orientable = loop.orientable;
  return out;
}

// Reindexes the loop, reflecting if necessary, so that edges[0] == through
// and that edge is traversed from 'from' to 'to'.
WhiteLoop orient_through(const WhiteLoop& loop, const EdgeId& through, const QV& from,
                         const QV& to) {
  const size_t sz = loop.edges.size();
  if (std::count(loop.edges.begin(), loop.edges.end(), through) != 1)
    throw InvariantError("double_break: loop does not pass the shared edge exactly once");
  for (const WhiteLoop& cand : {loop, reflect_loop(loop)}) {
    const size_t t =
        (size_t)(std::find(cand.edges.begin(), cand.edges.end(), through) - cand.edges.begin());
    WhiteLoop rot = rotate_loop(cand, t);
    if (rot.vertices[0] == from && rot.vertices[1 % sz] == to) return rot;
  }
  throw InvariantError("double_break: shared edge does not join the expected pair");
}

}  // namespace

Coloring color(const MoebiusHoneycomb& h) {
  require_valid_mh(h, "color");
  Coloring c;
  for (const auto& [vid, p] : h.pos)
    if (!integral_point(p)) c.whiteVertices.insert(qv_of_window(h.n, vid));
  for (const EdgeId& e : moebius_edges(h.n))
    if (!is_integer(const_coord(h, e))) c.whiteEdges.insert(e);
  return c;
}

ContractedGraph contract(const MoebiusHoneycomb& h, const Coloring& c) {
  require_valid_mh(h, "contract");
  const int n = h.n;
  QuotientIncidence qi(n);

  std::vector<QV> verts;
  verts.reserve(qi.at.size());
  for (const auto& [q, inc] : qi.at) verts.push_back(q);
  std::map<QV, int> vidx;
  for (size_t k = 0; k < verts.size(); ++k) vidx[verts[k]] = (int)k;

  std::vector<EdgeId> degenerate, surviving;
  for (const EdgeId& e : qi.edges)
    (edge_length(h, e) == 0 ? degenerate : surviving).push_back(e);

  DSU dsu(verts.size());
  for (const EdgeId& e : degenerate) {
    const auto ends = edge_endpoints(n, e);
    dsu.unite(vidx.at(ends.first), vidx.at(ends.second));
  }

  ContractedGraph g;
  g.n = n;
  std::map<int, int> rootToCluster;
  for (const QV& q : verts) {
    const int root = dsu.find(vidx.at(q));
    auto it = rootToCluster.find(root);
    if (it == rootToCluster.end()) {
      it = rootToCluster.emplace(root, (int)g.clusters.size()).first;
      g.clusters.emplace_back();
    }
    g.clusters[(size_t)it->second].members.push_back(q);
    g.rho[q] = it->second;
  }

  // Parity of seam crossings along degenerate paths from the least member.
  // Sides at odd parity report their direction through the seam swap so all
  // directions of a cluster share one frame.
  std::map<QV, std::vector<std::pair<QV, bool>>> dadj;
  for (const EdgeId& e : degenerate) {
    const auto ends = edge_endpoints(n, e);
    const bool wrap = is_wrap(e);
    dadj[ends.first].push_back({ends.second, wrap});
    dadj[ends.second].push_back({ends.first, wrap});
  }
  std::map<QV, int> parity;
  for (const auto& cl : g.clusters) {
    std::vector<QV> todo{cl.members.front()};
    parity[cl.members.front()] = 0;
    while (!todo.empty()) {
      const QV cur = todo.back();
      todo.pop_back();
      const auto it = dadj.find(cur);
      if (it == dadj.end()) continue;
      for (const auto& [nx, wrap] : it->second) {
        const int want = parity.at(cur) ^ (wrap ? 1 : 0);
        const auto pit = parity.find(nx);
        if (pit == parity.end()) {
          parity[nx] = want;
          todo.push_back(nx);
        } else if (pit->second != want) {
          throw InvariantError("contract: inconsistent seam frames at " + nx.label());
        }
      }
    }
  }

  for (const EdgeId& e : degenerate) {
    const auto ends = edge_endpoints(n, e);
    const int ci = g.rho.at(ends.first);
    if (ci != g.rho.at(ends.second))
      throw InvariantError("contract: degenerate edge spans clusters at " + e.label());
    g.clusters[(size_t)ci].internalEdges.push_back(e);
  }
  for (auto& cl : g.clusters) std::sort(cl.internalEdges.begin(), cl.internalEdges.end());

  for (const EdgeId& e : surviving) {
    for (const EdgeSide& s : edge_sides(n, e)) {
      const QV q = qv_of_window(n, s.window);
      const Ray anchor = parity.at(q) ? seam_ray(s.ray) : s.ray;
      g.clusters[(size_t)g.rho.at(q)].sides.push_back({e, q, anchor});
    }
  }
  for (auto& cl : g.clusters)
    std::sort(cl.sides.begin(), cl.sides.end(), [](const auto& x, const auto& y) {
      return std::tie(x.edge, x.member) < std::tie(y.edge, y.member);
    });

  for (auto& cl : g.clusters) {
    bool anyWhite = false, allWhite = true, boundary = false;
    for (const QV& m : cl.members) {
      const bool w = c.vertex_white(m);
      anyWhite = anyWhite || w;
      allWhite = allWhite && w;
      boundary = boundary || m.i == 0;
    }
    if (anyWhite != allWhite)
      throw InvariantError("contract: cluster mixes vertex colors at " + cl.members.front().label());
    cl.white = anyWhite;
    cl.type = boundary ? VertexType::Boundary : classify_interior(cl.sides, cl.members.front());
  }

  std::map<std::pair<int, int>, std::vector<EdgeId>> bundles;
  for (const EdgeId& e : surviving) {
    const auto ends = edge_endpoints(n, e);
    int cu = g.rho.at(ends.first);
    int cv = g.rho.at(ends.second);
    if (cu > cv) std::swap(cu, cv);
    bundles[{cu, cv}].push_back(e);
  }
  for (auto& [key, members] : bundles) {
    std::sort(members.begin(), members.end());
    const bool white = c.edge_white(members.front());
    for (const EdgeId& e : members)
      if (c.edge_white(e) != white)
        throw InvariantError("contract: parallel edges mix colors at " + e.label());
    g.edges.push_back({key.first, key.second, members, white});
  }
  return g;
}

std::vector<WhiteLoop> white_loops(const MoebiusHoneycomb& h, const ContractedGraph& g,
                                   const Coloring& c) {
  require_valid_mh(h, "white_loops");
  const int n = h.n;
  if (g.n != n) throw InputError("white_loops: contracted graph built for a different n");
  auto fail = [](const std::string& m) { throw InvariantError("white_loops: " + m); };

  for (const auto& [vid, p] : h.pos) {
    int halves = 0;
    for (int axis = 0; axis < 3; ++axis) {
      const Rat& v = p.coord(axis);
      if (!is_integer(v + v)) fail("coordinate off the half-integer lattice at " + vid.label());
      if (is_half_integer(v)) ++halves;
    }
    if (c.vertex_white(qv_of_window(n, vid)) != (halves == 2))
      fail("vertex color disagrees with the half-lattice at " + vid.label());
  }

  QuotientIncidence qi(n);
  std::map<QV, std::array<const IncidentEdge*, 2>> whitesAt;
  std::map<QV, const IncidentEdge*> blackAt;
  for (const auto& [q, inc] : qi.at) {
    if (!c.vertex_white(q)) continue;
    if (q.i == 0) fail("white vertex on the boundary at " + q.label());
    std::vector<const IncidentEdge*> ww, bb;
    for (const auto& ie : inc) (c.edge_white(ie.edge) ? ww : bb).push_back(&ie);
    if (inc.size() != 3 || ww.size() != 2)
      fail("white vertex without exactly two white edges at " + q.label());
    whitesAt[q] = {ww[0], ww[1]};
    blackAt[q] = bb[0];
  }
  for (const EdgeId& e : qi.edges) {
    if (!c.edge_white(e)) continue;
    const auto ends = edge_endpoints(n, e);
    if (!c.vertex_white(ends.first) || !c.vertex_white(ends.second))
      fail("white edge with a black endpoint at " + e.label());
  }

  for (const auto& cl : g.clusters) {
    if (!cl.white) continue;
    if (cl.type == VertexType::SixValent)
      fail("six-valent white vertex at " + cl.members.front().label());
    if (cl.type == VertexType::Crossing && cl.internalEdges.size() == 1 &&
        c.edge_white(cl.internalEdges.front())) {
      bool allPortsWhite = true;
      for (const auto& s : cl.sides) allPortsWhite = allPortsWhite && c.edge_white(s.edge);
      if (allPortsWhite)
        fail("crossing threaded by a white edge at " + cl.internalEdges.front().label());
    }
  }
  for (const auto& me : g.edges)
    if (me.white && me.members.size() > 1)
      fail("white edge of multiplicity " + std::to_string(me.members.size()) + " at " +
           me.members.front().label());

  const auto degenerate = [&](const EdgeId& e) { return edge_length(h, e) == 0; };

  std::vector<EdgeId> whiteEdges;
  for (const EdgeId& e : qi.edges)
    if (c.edge_white(e)) whiteEdges.push_back(e);
  std::sort(whiteEdges.begin(), whiteEdges.end());

  std::set<EdgeId> used;
  std::vector<WhiteLoop> loops;
  const size_t stepLimit = 4 * whiteEdges.size() + 16;
  for (const EdgeId& e0 : whiteEdges) {
    if (used.count(e0)) continue;
    WhiteLoop loop;
    const auto ends0 = edge_endpoints(n, e0);
    const QV start = std::min(ends0.first, ends0.second);
    loop.vertices.push_back(start);
    QV cur = start;
    EdgeId e = e0;
    for (size_t steps = 0;; ++steps) {
      if (steps > stepLimit) fail("white walk does not close at " + e0.label());
      if (used.count(e)) fail("white walk revisited " + e.label());
      used.insert(e);
      loop.edges.push_back(e);
      const auto ends = edge_endpoints(n, e);
      if (cur != ends.first && cur != ends.second) fail("white walk detached at " + e.label());
      cur = cur == ends.first ? ends.second : ends.first;
      loop.vertices.push_back(cur);

      const auto wit = whitesAt.find(cur);
      if (wit == whitesAt.end()) fail("white walk reached a black vertex at " + cur.label());
      const IncidentEdge* in = nullptr;
      const IncidentEdge* other = nullptr;
      for (const IncidentEdge* ie : wit->second) (ie->edge == e ? in : other) = ie;
      if (in == nullptr || other == nullptr)
        fail("arrival edge is not a white edge of " + cur.label());

      EdgeId next = other->edge;
      const EdgeId black = blackAt.at(cur)->edge;
      if (!degenerate(e) && !degenerate(next) && degenerate(black)) {
        // Crossing reached on a straight line: continue on the other side of
        // the black internal edge, in the travel direction.
        const auto bends = edge_endpoints(n, black);
        const QV partner = cur == bends.first ? bends.second : bends.first;
        Ray dir = -in->ray;
        if (is_wrap(black)) dir = seam_ray(dir);
        const auto pit = whitesAt.find(partner);
        if (pit == whitesAt.end()) fail("crossing partner is black at " + partner.label());
        const IncidentEdge* exit = nullptr;
        for (const IncidentEdge* ie : pit->second)
          if (ie->ray == dir) exit = ie;
        if (exit == nullptr || degenerate(exit->edge))
          fail("no straight continuation through " + black.label());
        loop.crossings.push_back({g.rho.at(cur), black, (int)loop.edges.size()});
        loop.edges.push_back(black);
        loop.vertices.push_back(partner);
        cur = partner;
        next = exit->edge;
      }
      e = next;
      if (e == e0) {
        if (cur != start) fail("white walk closed from the wrong side at " + e0.label());
        break;
      }
    }
    loop.vertices.pop_back();
    std::set<EdgeId> distinct(loop.edges.begin(), loop.edges.end());
    loop.canonical = distinct.size() == loop.edges.size();
    loop.orientable = loop.edges.size() % 2 == 0;
    loops.push_back(std::move(loop));
  }
  return loops;
}

bool is_orientable(int n, const std::vector<QV>& vertices) {
  if (n < 1) throw InputError("is_orientable: n must be positive");
  if (vertices.size() < 3 || vertices.front() != vertices.back())
    throw InputError("is_orientable: vertices do not form a closed walk");
  QuotientIncidence qi(n);
  for (size_t k = 0; k + 1 < vertices.size(); ++k) {
    const QV& u = vertices[k];
    const QV& v = vertices[k + 1];
    if (!qi.at.count(u)) throw InputError("is_orientable: unknown vertex " + u.label());
    if (u == v || qi.joining(u, v) == nullptr)
      throw InputError("is_orientable: walk steps off the graph at " + u.label());
  }
  return (vertices.size() - 1) % 2 == 0;
}

bool is_orientable(const WhiteLoop& loop) {
  if (loop.edges.empty() || loop.edges.size() != loop.vertices.size())
    throw InputError("is_orientable: malformed loop");
  return loop.edges.size() % 2 == 0;
}

Rat PhiAssignment::at(const EdgeId& e) const {
  const auto it = phi.find(e);
  return it == phi.end() ? Rat(0) : it->second;
}

void PhiAssignment::add(const EdgeId& e, const Rat& v) {
  if (v == 0) return;
  Rat& slot = phi[e];
  slot += v;
  if (slot == 0) phi.erase(e);
}

MoebiusHoneycomb apply_phi(const MoebiusHoneycomb& h, const PhiAssignment& phi) {
  require_valid_mh(h, "apply_phi");
  const int n = h.n;
  for (const auto& [e, v] : phi.phi)
    if (!in_edge_listing(n, e)) throw InputError("apply_phi: shift on unlisted edge " + e.label());
  QuotientIncidence qi(n);
  for (const auto& [q, inc] : qi.at) {
    Rat sum = 0;
    for (const auto& ie : inc) sum += phi.at(ie.edge);
    if (sum != 0) throw InputError("apply_phi: shifts do not balance at " + q.label());
  }
  MoebiusHoneycomb out = shift_positions(h, phi);
  for (const EdgeId& e : moebius_edges(n))
    if (edge_length(out, e) < 0)
      throw InputError("apply_phi: edge driven to negative length at " + e.label());
  if (!validate_mh(out)) throw InvariantError("apply_phi: shifted honeycomb failed validation");
  return out;
}

EdgeId double_break(const MoebiusHoneycomb& h, const WhiteLoop& a, const WhiteLoop& b,
                    PhiAssignment& phi) {
  require_valid_mh(h, "double_break");
  if (is_orientable(a) || is_orientable(b))
    throw InputError("double_break: loops must be non-orientable");

  std::set<int> aClusters;
  for (const auto& u : a.crossings) aClusters.insert(u.cluster);
  std::optional<EdgeId> sharedEdge;
  for (const auto& u : b.crossings)
    if (aClusters.count(u.cluster) && (!sharedEdge || u.internalEdge < *sharedEdge))
      sharedEdge = u.internalEdge;
  if (!sharedEdge) throw InputError("double_break: loops do not share a crossing");

  const auto ends = edge_endpoints(h.n, *sharedEdge);
  const QV P = std::min(ends.first, ends.second);
  const QV Q = std::max(ends.first, ends.second);

  // The two loops pass the shared edge in opposite directions; alternating
  // half shifts around each then cancel at both of its endpoints. Of the two
  // opposite-direction assignments, exactly one opens the shared edge to
  // positive length; the other would force it negative.
  const auto alternation = [&](bool flip) {
    PhiAssignment out = phi;
    const WhiteLoop A = orient_through(a, *sharedEdge, flip ? P : Q, flip ? Q : P);
    const WhiteLoop B = orient_through(b, *sharedEdge, flip ? Q : P, flip ? P : Q);
    for (const WhiteLoop* L : {&A, &B}) {
      const size_t sz = L->edges.size();
      if (sz % 2 == 0) throw InvariantError("double_break: oriented loop has even length");
      for (size_t idx = 1; idx < sz; ++idx) out.add(L->edges[idx], Rat(idx % 2 == 1 ? 1 : -1, 2));
    }
    return out;
  };
  for (bool flip : {false, true}) {
    PhiAssignment cand = alternation(flip);
    if (edge_length(shift_positions(h, cand), *sharedEdge) > 0) {
      phi = std::move(cand);
      return *sharedEdge;
    }
  }
  throw InvariantError("double_break: shared edge opens in neither direction at " +
                       sharedEdge->label());
}

void sixfold_break(const MoebiusHoneycomb& h, const Coloring& c, PhiAssignment& phi) {
  require_valid_mh(h, "sixfold_break");
  const int n = h.n;
  QuotientIncidence qi(n);
  auto fail = [](const std::string& m) { throw InvariantError("sixfold_break: " + m); };

  std::vector<EdgeId> bad;
  {
    const MoebiusHoneycomb s = shift_positions(h, phi);
    for (const EdgeId& e : qi.edges)
      if (edge_length(s, e) < 0) bad.push_back(e);
  }
  std::sort(bad.begin(), bad.end());

  for (const EdgeId& e : bad) {
    {
      const MoebiusHoneycomb s = shift_positions(h, phi);
      if (edge_length(s, e) >= 0) continue;
    }
    if (!c.edge_white(e)) fail("black edge driven negative at " + e.label());
    const Rat pe = phi.at(e);
    const int sigma = pe > 0 ? 1 : -1;
    if (pe != Rat(sigma, 2)) fail("unexpected shift on " + e.label());
    if (edge_length(h, e) != Rat(1, 2)) fail("violating edge not of length one half at " + e.label());

    // At each endpoint the remaining white edge carries the same half shift
    // and the black edge is degenerate with the opposite unit shift; the far
    // ends close up into a triangle over one more degenerate black edge.
    struct Flank {
      EdgeId white;
      EdgeId black;
      QV far;
    };
    auto analyze = [&](const QV& v) {
      std::vector<EdgeId> ws, ks;
      for (const auto& ie : qi.at.at(v)) {
        if (ie.edge == e) continue;
        (c.edge_white(ie.edge) ? ws : ks).push_back(ie.edge);
      }
      if (ws.size() != 1 || ks.size() != 1)
        fail("endpoint without a white-black flank pair at " + v.label());
      if (phi.at(ws.front()) != Rat(sigma, 2)) fail("white flank shift mismatch at " + v.label());
      if (edge_length(h, ks.front()) != 0) fail("black flank not degenerate at " + v.label());
      if (phi.at(ks.front()) != Rat(-sigma)) fail("black flank shift mismatch at " + v.label());
      const auto be = edge_endpoints(n, ks.front());
      return Flank{ws.front(), ks.front(), be.first == v ? be.second : be.first};
    };
    const auto eEnds = edge_endpoints(n, e);
    const Flank f0 = analyze(eEnds.first);
    const Flank f1 = analyze(eEnds.second);

    auto whites_at = [&](const QV& v) {
      std::vector<EdgeId> out;
      for (const auto& ie : qi.at.at(v))
        if (c.edge_white(ie.edge)) out.push_back(ie.edge);
      if (out.size() != 2) fail("far vertex without two white edges at " + v.label());
      return out;
    };
    auto far_of = [&](const EdgeId& s, const QV& from) {
      const auto se = edge_endpoints(n, s);
      return se.first == from ? se.second : se.first;
    };
    std::optional<std::array<EdgeId, 3>> found;
    for (const EdgeId& s0 : whites_at(f0.far)) {
      if (found) break;
      if (phi.at(s0) != Rat(sigma, 2)) continue;
      for (const EdgeId& s1 : whites_at(f1.far)) {
        if (found) break;
        if (s1 == s0 || phi.at(s1) != Rat(sigma, 2)) continue;
        const QV m0 = far_of(s0, f0.far);
        const QV m1 = far_of(s1, f1.far);
        if (m0 == m1) continue;
        const auto* par = qi.joining(m0, m1);
        if (par == nullptr) continue;
        for (const EdgeId& d3 : *par) {
          if (c.edge_white(d3) || edge_length(h, d3) != 0 || phi.at(d3) != Rat(-sigma)) continue;
          found = std::array<EdgeId, 3>{s0, s1, d3};
          break;
        }
      }
    }
    if (!found) fail("no closing triangle for " + e.label());
    const auto [s0, s1, d3] = *found;
    phi.add(e, Rat(-sigma));
    phi.add(s0, Rat(-sigma));
    phi.add(s1, Rat(-sigma));
    phi.add(f0.black, Rat(sigma));
    phi.add(f1.black, Rat(sigma));
    phi.add(d3, Rat(sigma));
  }

  {
    const MoebiusHoneycomb s = shift_positions(h, phi);
    for (const EdgeId& e : qi.edges)
      if (edge_length(s, e) < 0) fail("shift still drives " + e.label() + " negative");
  }
  for (const auto& [q, inc] : qi.at) {
    Rat sum = 0;
    for (const auto& ie : inc) sum += phi.at(ie.edge);
    if (sum != 0) fail("shift balance broken at " + q.label());
  }
}

IntegralizeResult integralize(const MoebiusHoneycomb& h) {
  require_valid_mh(h, "integralize");
  const std::vector<Rat> xi = boundary_mh(h);
  Rat xiSum = 0;
  for (const Rat& x : xi) {
    if (!is_integer(x)) throw InputError("integralize: boundary values must be integers");
    xiSum += x;
  }
  if (!is_integer(h.delta) || h.delta < 1)
    throw InputError("integralize: delta must be a positive integer");
  if (rat_floor(xiSum) % 2 != 0)
    throw InputError("integralize: boundary values must have even sum");

  IntegralizeResult out;
  if (is_integral(h)) {
    out.honeycomb = h;
    return out;
  }

  for (const auto& [vid, p] : h.pos)
    for (int axis = 0; axis < 3; ++axis) {
      const Rat& v = p.coord(axis);
      if (!is_integer(v + v))
        throw InputError("integralize: positions must lie on the half-integer lattice");
    }

  const Coloring col = color(h);
  if (col.whiteVertices.size() % 2 != 0)
    throw InvariantError("integralize: odd white vertex count");
  const ContractedGraph g = contract(h, col);
  out.loops = white_loops(h, g, col);
  if (out.loops.empty())
    throw InvariantError("integralize: no white loops on a fractional honeycomb");
  for (const WhiteLoop& loop : out.loops)
    if (is_orientable(loop)) throw InvariantError("integralize: orientable white loop");
  if (out.loops.size() % 2 != 0) throw InvariantError("integralize: odd white loop count");

  for (size_t t = 0; t + 1 < out.loops.size(); t += 2) {
    try {
      const EdgeId shared = double_break(h, out.loops[t], out.loops[t + 1], out.phi);
      out.pairings.push_back({(int)t, (int)(t + 1), shared});
    } catch (const InputError& err) {
      throw InvariantError(std::string("integralize: ") + err.what());
    }
  }
  sixfold_break(h, col, out.phi);

  for (const auto& [e, v] : out.phi.phi) {
    if (col.edge_white(e)) {
      if (v != Rat(1, 2) && v != Rat(-1, 2))
        throw InvariantError("integralize: white edge shift out of range at " + e.label());
    } else if (v != 1 && v != -1) {
      throw InvariantError("integralize: black edge shift out of range at " + e.label());
    }
  }

  MoebiusHoneycomb result;
  try {
    result = apply_phi(h, out.phi);
  } catch (const InputError& err) {
    throw InvariantError(std::string("integralize: ") + err.what());
  }
  if (!is_integral(result)) throw InvariantError("integralize: shifted honeycomb still fractional");
  if (boundary_mh(result) != xi) throw InvariantError("integralize: boundary drifted");
  out.honeycomb = std::move(result);
  return out;
}

std::optional<SaturationResult> saturation_witness(const Partition& lambda, const Partition& mu,
                                                   const Partition& nu, long long k, int n) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  if (k < 1) throw InputError("saturation_witness: k must be positive");
  if ((weight(lambda) + weight(mu) + weight(nu)) % 2 != 0)
    throw InputError("saturation_witness: partition weights must have even sum");
  if (n < 0) throw InputError("saturation_witness: n must be nonnegative");
  if (n == 0)
    n = (int)std::max({size_t{1}, trim(lambda).size(), trim(mu).size(), trim(nu).size()});
  long long delta = 1;
  for (const Partition* p : {&lambda, &mu, &nu})
    for (long long part : *p) delta = std::max(delta, part);

  const std::vector<Rat> xiK =
      xi_from_partitions(scaled(lambda, k), scaled(mu, k), scaled(nu, k), k * delta, n);
  std::optional<MoebiusHoneycomb> witness;
  MoebiusFiber(xiK, Rat(k * delta), n).enumerate([&](const MoebiusHoneycomb& w) {
    witness = w;
    return false;
  });
  if (!witness) return std::nullopt;

  const std::vector<Rat> xiTarget = xi_from_partitions(lambda, mu, nu, delta, n);
  const MoebiusHoneycomb base = combine(Rat(1, k), *witness, Rat(0), *witness);
  if (boundary_mh(base) != xiTarget)
    throw InvariantError("saturation_witness: scaled witness boundary mismatch");

  const LargestLift lift = largest_lift(xiTarget, base.delta, n);
  IntegralizeResult broken = integralize(lift.honeycomb);
  if (boundary_mh(broken.honeycomb) != xiTarget)
    throw InvariantError("saturation_witness: witness boundary drifted");

  SaturationResult out;
  out.witness = broken.honeycomb;
  out.breaking = std::move(broken);
  out.k = k;
  out.delta = delta;
  out.n = n;
  return out;
}

}  // namespace honey

#include "honey/tinkertoy.hpp"

namespace honey {

std::string EdgeId::label() const {
  const char* t = type == EType::N ? "N" : type == EType::SE ? "SE" : "SW";
  return std::string(t) + ":" + std::to_string(i) + ":" + std::to_string(j);
}

std::string QV::label() const { return "A:" + std::to_string(i) + ":" + std::to_string(j); }

std::string HexId::label() const {
  return "alpha:" + std::to_string(i) + ":" + std::to_string(j);
}

// ---------------------------------------------------------------------- GL

std::vector<VertexId> gl_vertices(int n) {
  std::vector<VertexId> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({VKind::A, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({VKind::B, i, j});
  return out;
}

std::vector<GLEdge> gl_edges(int n) {
  std::vector<GLEdge> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      VertexId a{VKind::A, i, j};
      out.push_back({EType::N, a, {VKind::B, i, j}, 2});
      out.push_back({EType::SE, a, {VKind::B, i - 1, j - 1}, 0});
      out.push_back({EType::SW, a, {VKind::B, i - 1, j}, 1});
    }
  return out;
}

std::vector<VertexId> gl_boundary_x(int n) {
  std::vector<VertexId> out;
  for (int i = 1; i <= n; ++i) out.push_back({VKind::B, i - 1, n});
  return out;
}

std::vector<VertexId> gl_boundary_y(int n) {
  std::vector<VertexId> out;
  for (int i = 1; i <= n; ++i) out.push_back({VKind::B, n - i, n - i + 1});
  return out;
}

std::vector<VertexId> gl_boundary_z(int n) {
  std::vector<VertexId> out;
  for (int i = 1; i <= n; ++i) out.push_back({VKind::B, 0, i});
  return out;
}

// ------------------------------------------------------------------ Moebius

int reduce_j(int n, int j) {
  if (n < 1) throw InvariantError("reduce_j: n < 1");
  int period = 3 * n;
  int r = (j - 1) % period;
  if (r < 0) r += period;
  return r + 1;
}

QV equiv_vertex(int n, VKind kind, int i, int j) {
  if (i < 0 || i > n) throw InvariantError("equiv_vertex: row out of range");
  if (kind == VKind::A) return {i, reduce_j(n, j)};
  return {n - i, reduce_j(n, j - i + 2 * n)};
}

VertexId window_of(int n, const QV& q) {
  if (q.i < 0 || q.i > n || q.j < 1 || q.j > 3 * n)
    throw InvariantError("window_of: class label out of range");
  if (q.j <= n + q.i) return {VKind::A, q.i, q.j};
  return {VKind::B, n - q.i, q.j - n - q.i};
}

bool in_window(int n, const VertexId& w) {
  return w.i >= 0 && w.i <= n && w.j >= 1 && w.j <= n + w.i;
}

QV qv_of_window(int n, const VertexId& w) {
  if (!in_window(n, w)) throw InvariantError("qv_of_window: not a window vertex " + w.label());
  return equiv_vertex(n, w.kind, w.i, w.j);
}

bool is_wrap(const EdgeId& e) { return e.type == EType::SE && e.j == 1; }

bool in_edge_listing(int n, const EdgeId& e) {
  switch (e.type) {
    case EType::N: return e.i >= 0 && e.i <= n && e.j >= 1 && e.j <= n + e.i;
    case EType::SE: return e.i >= 1 && e.i <= n && e.j >= 1 && e.j <= n + e.i;
    case EType::SW: return e.i >= 1 && e.i <= n && e.j >= 1 && e.j <= n + e.i - 1;
  }
  return false;
}

std::vector<EdgeId> moebius_edges(int n) {
  std::vector<EdgeId> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n + i; ++j) out.push_back({EType::N, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + i; ++j) out.push_back({EType::SE, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + i - 1; ++j) out.push_back({EType::SW, i, j});
  return out;
}

EdgeId canonical_edge(int n, EType type, int i, int j) {
  EdgeId e{type, i, reduce_j(n, j)};
  if (in_edge_listing(n, e)) return e;
  EdgeId p;  // seam partner of the same strip edge
  switch (type) {
    case EType::N: p = {EType::N, n - i, reduce_j(n, j - i + 2 * n)}; break;
    case EType::SE: p = {EType::SW, n - i + 1, reduce_j(n, j - i + 2 * n)}; break;
    case EType::SW: p = {EType::SE, n - i + 1, reduce_j(n, j - i + 2 * n + 1)}; break;
  }
  if (!in_edge_listing(n, p))
    throw InvariantError("canonical_edge: no listed representative for " + e.label());
  return p;
}

std::pair<QV, QV> edge_endpoints(int n, const EdgeId& e) {
  if (!in_edge_listing(n, e))
    throw InvariantError("edge_endpoints: unlisted edge " + e.label());
  QV tail = equiv_vertex(n, VKind::A, e.i, e.j);
  QV head;
  switch (e.type) {
    case EType::N: head = equiv_vertex(n, VKind::B, e.i, e.j); break;
    case EType::SE: head = equiv_vertex(n, VKind::B, e.i - 1, e.j - 1); break;
    case EType::SW: head = equiv_vertex(n, VKind::B, e.i - 1, e.j); break;
  }
  return {tail, head};
}

std::array<EdgeSide, 2> edge_sides(int n, const EdgeId& e) {
  if (!in_edge_listing(n, e)) throw InvariantError("edge_sides: unlisted edge " + e.label());
  switch (e.type) {
    case EType::N:
      return {EdgeSide{{VKind::A, e.i, e.j}, 2, kE3}, EdgeSide{{VKind::B, e.i, e.j}, 2, -kE3}};
    case EType::SW:
      return {EdgeSide{{VKind::A, e.i, e.j}, 1, kE2},
              EdgeSide{{VKind::B, e.i - 1, e.j}, 1, -kE2}};
    case EType::SE:
      if (e.j >= 2)
        return {EdgeSide{{VKind::A, e.i, e.j}, 0, kE1},
                EdgeSide{{VKind::B, e.i - 1, e.j - 1}, 0, -kE1}};
      // Wrap edge: the far side sits on the other flank of the seam, where
      // the edge runs along the local y axis.
      return {EdgeSide{{VKind::A, e.i, 1}, 0, kE1},
              EdgeSide{{VKind::A, n - e.i + 1, 2 * n - e.i + 1}, 1, kE2}};
  }
  throw InvariantError("edge_sides: bad edge type");
}

std::array<std::optional<EdgeId>, 3> window_incidence(int n, const VertexId& w) {
  if (!in_window(n, w)) throw InvariantError("window_incidence: not a window vertex");
  std::array<std::optional<EdgeId>, 3> out;
  if (w.kind == VKind::A) {
    out[2] = EdgeId{EType::N, w.i, w.j};
    if (w.i >= 1) {
      out[0] = EdgeId{EType::SE, w.i, w.j};
      out[1] = canonical_edge(n, EType::SW, w.i, w.j);  // folds to a wrap edge at j = n+i
    }
  } else {
    out[2] = EdgeId{EType::N, w.i, w.j};
    if (w.i <= n - 1) {
      out[0] = EdgeId{EType::SE, w.i + 1, w.j + 1};
      out[1] = EdgeId{EType::SW, w.i + 1, w.j};
    }
  }
  return out;
}

// ----------------------------------------------------------------- hexagons

std::vector<HexId> moebius_hexagons(int n) {
  std::vector<HexId> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n + i; ++j) out.push_back({i, j});
  return out;
}

std::optional<HexId> canonical_hex(int n, int i, int j) {
  if (i < 0 || i > n) throw InvariantError("canonical_hex: row out of range");
  j = reduce_j(n, j);
  if (j > n + i) {
    int i2 = n - i, j2 = reduce_j(n, j - i + 2 * n);
    if (j2 > n + i2) throw InvariantError("canonical_hex: fold failed");
    i = i2;
    j = j2;
  }
  if (i == 0 || i == n) return std::nullopt;
  return HexId{i, j};
}

std::array<EdgeId, 6> hex_edges(int n, const HexId& h) {
  if (h.i < 1 || h.i > n - 1 || h.j < 1 || h.j > n + h.i)
    throw InvariantError("hex_edges: unlisted hexagon " + h.label());
  int i = h.i, j = h.j;
  return {canonical_edge(n, EType::SW, i, j),     canonical_edge(n, EType::N, i, j),
          canonical_edge(n, EType::SE, i + 1, j + 1), canonical_edge(n, EType::SW, i + 1, j + 1),
          canonical_edge(n, EType::N, i, j + 1),  canonical_edge(n, EType::SE, i, j + 1)};
}

std::array<std::optional<HexId>, 6> hex_neighbors(int n, const HexId& h) {
  if (h.i < 1 || h.i > n - 1 || h.j < 1 || h.j > n + h.i)
    throw InvariantError("hex_neighbors: unlisted hexagon " + h.label());
  int i = h.i, j = h.j;
  return {canonical_hex(n, i - 1, j - 1), canonical_hex(n, i, j - 1),
          canonical_hex(n, i + 1, j),     canonical_hex(n, i + 1, j + 1),
          canonical_hex(n, i, j + 1),     canonical_hex(n, i - 1, j)};
}

}  // namespace honey

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "honey/core.hpp"

namespace honey {

// Unit steps of the three edge families, in the plane x + y + z = 0.
// An edge with direction +-e1 has constant x, +-e2 constant y, +-e3
// constant z. The three rays sum to zero.
struct Ray {
  int x = 0, y = 0, z = 0;
  auto operator<=>(const Ray&) const = default;
  friend Ray operator-(const Ray& r) { return {-r.x, -r.y, -r.z}; }
  friend Ray operator+(const Ray& a, const Ray& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
};

inline constexpr Ray kE1{0, -1, 1};
inline constexpr Ray kE2{1, 0, -1};
inline constexpr Ray kE3{-1, 1, 0};

// Linear part of the seam identification: swaps x and y. An involution;
// sends e1 -> -e2, e2 -> -e1, e3 -> -e3.
inline Ray seam_ray(const Ray& r) { return {r.y, r.x, r.z}; }

enum class EType : uint8_t { N, SE, SW };

struct EdgeId {
  EType type = EType::N;
  int i = 0;
  int j = 0;
  auto operator<=>(const EdgeId&) const = default;
  std::string label() const;  // "N:i:j"
};

// ---------------------------------------------------------------------------
// Triangular tinkertoy (Littlewood-Richardson side).
//
// Vertices: A(i,j) for 1 <= i < j <= n and B(i,j) for 0 <= i < j <= n.
// Each A(i,j) carries three edges, named by compass direction:
//   N  : A(i,j) -- B(i,j)      constant z, length = x(A) - x(B) >= 0
//   SW : A(i,j) -- B(i-1,j)    constant y, length = x(B) - x(A) >= 0
//   SE : A(i,j) -- B(i-1,j-1)  constant x, length = z(B) - z(A) >= 0
// ---------------------------------------------------------------------------

struct GLEdge {
  EType type;
  VertexId tail;  // the A vertex
  VertexId head;  // the B vertex
  int axis;       // constant coordinate: 0 = x, 1 = y, 2 = z
};

std::vector<VertexId> gl_vertices(int n);
std::vector<GLEdge> gl_edges(int n);

// Boundary vertices in reading order; entry i of each list is pinned when a
// boundary (mustar, nustar, lambda) is imposed:
//   x( B(i-1, n)     ) = -mu_{n-i+1}
//   y( B(n-i, n-i+1) ) = -nu_{n-i+1}
//   z( B(0, i)       ) = lambda_i
std::vector<VertexId> gl_boundary_x(int n);
std::vector<VertexId> gl_boundary_y(int n);
std::vector<VertexId> gl_boundary_z(int n);

// ---------------------------------------------------------------------------
// Moebius tinkertoy.
//
// The infinite strip graph has vertices A(i,j), B(i,j) with 0 <= i <= n and
// j ranging over all integers; it is folded by the identifications
//   X(i, j) ~ X(i, j + 3n)                       (period)
//   B(i, j) ~ A(n-i, j-i+2n mod 3n)              (seam)
// Quotient vertex classes are labelled QV(i,j) with 0 <= i <= n and
// 1 <= j <= 3n, the class of strip vertex A(i,j). The window
// { A(i,j), B(i,j) : 0 <= i <= n, 1 <= j <= n+i } meets every class exactly
// once. Boundary classes are exactly those with i = 0.
// ---------------------------------------------------------------------------

struct QV {
  int i = 0;
  int j = 0;
  auto operator<=>(const QV&) const = default;
  std::string label() const;  // "A:i:j" (class of strip vertex A(i,j))
};

int reduce_j(int n, int j);  // j mod 3n, shifted into [1, 3n]

QV equiv_vertex(int n, VKind kind, int i, int j);  // class of any strip vertex
VertexId window_of(int n, const QV& q);            // unique window representative
QV qv_of_window(int n, const VertexId& w);
bool in_window(int n, const VertexId& w);

// Canonical (transversal) edge listing of the quotient graph:
//   N (i,j): 0 <= i <= n, 1 <= j <= n+i    A(i,j) -- B(i,j),   constant z
//   SE(i,j): 1 <= i <= n, 1 <= j <= n+i    A(i,j) -- B(i-1,j-1), constant x
//   SW(i,j): 1 <= i <= n, 1 <= j <= n+i-1  A(i,j) -- B(i-1,j),  constant y
// SE(i,1) runs through the seam ("wrap" edge); its head B(i-1,0) lies outside
// the window and is the class of A(n-i+1, 2n-i+1).
std::vector<EdgeId> moebius_edges(int n);
bool is_wrap(const EdgeId& e);
bool in_edge_listing(int n, const EdgeId& e);
// Folds any strip edge (arbitrary j) onto its listed representative.
EdgeId canonical_edge(int n, EType type, int i, int j);
std::pair<QV, QV> edge_endpoints(int n, const EdgeId& e);

// The two sides of a listed edge. window: the window vertex the side touches;
// axis: the constant coordinate of the edge in that vertex's frame; ray: the
// direction leading away from the vertex along the edge, again in that
// vertex's frame. For wrap edges the two frames differ by the seam swap.
struct EdgeSide {
  VertexId window;
  int axis;
  Ray ray;
};
std::array<EdgeSide, 2> edge_sides(int n, const EdgeId& e);

// Edges at a window vertex, indexed by the constant axis they carry there.
// Boundary vertices (A row 0, B row n) only have their N edge.
std::array<std::optional<EdgeId>, 3> window_incidence(int n, const VertexId& w);

// ---------------------------------------------------------------------------
// Hexagons of the Moebius quotient: classes alpha(i,j) with 1 <= i <= n-1,
// 1 <= j <= n+i (same folding as vertices). Rows 0 and n of the face lattice
// are the two unbounded faces.
// ---------------------------------------------------------------------------

struct HexId {
  int i = 0;
  int j = 0;
  auto operator<=>(const HexId&) const = default;
  std::string label() const;  // "alpha:i:j"
};

std::vector<HexId> moebius_hexagons(int n);             // row-major listing
std::optional<HexId> canonical_hex(int n, int i, int j);  // nullopt for rows 0, n

// The six edges of alpha(i,j) in cyclic order
//   SW(i,j), N(i,j), SE(i+1,j+1), SW(i+1,j+1), N(i,j+1), SE(i,j+1)
// (already folded to listed representatives). Positions 0,2,4 carry sign -1
// and positions 1,3,5 sign +1 in the alternating constant-coordinate identity
// for the perimeter.
std::array<EdgeId, 6> hex_edges(int n, const HexId& h);

// Faces across the six edges above, in the same order; nullopt = unbounded.
std::array<std::optional<HexId>, 6> hex_neighbors(int n, const HexId& h);

}  // namespace honey

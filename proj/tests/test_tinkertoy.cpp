#include <map>
#include <set>

#include "doctest.h"
#include "honey/tinkertoy.hpp"

using namespace honey;

TEST_CASE("rays") {
  CHECK(kE1 + kE2 + kE3 == Ray{0, 0, 0});
  CHECK(seam_ray(kE1) == -kE2);
  CHECK(seam_ray(kE2) == -kE1);
  CHECK(seam_ray(kE3) == -kE3);
  CHECK(seam_ray(seam_ray(kE1)) == kE1);
}

TEST_CASE("triangular graph inventory") {
  for (int n = 1; n <= 5; ++n) {
    auto vs = gl_vertices(n);
    CHECK((int)vs.size() == n * n);
    auto es = gl_edges(n);
    CHECK((int)es.size() == 3 * n * (n - 1) / 2);
    std::set<VertexId> vset(vs.begin(), vs.end());
    CHECK(vset.size() == vs.size());
    for (const auto& e : es) {
      CHECK(vset.count(e.tail) == 1);
      CHECK(vset.count(e.head) == 1);
      CHECK(e.tail.kind == VKind::A);
      CHECK(e.head.kind == VKind::B);
    }
    CHECK((int)gl_boundary_x(n).size() == n);
    CHECK((int)gl_boundary_y(n).size() == n);
    CHECK((int)gl_boundary_z(n).size() == n);
    for (const auto& v : gl_boundary_x(n)) CHECK(vset.count(v) == 1);
    for (const auto& v : gl_boundary_y(n)) CHECK(vset.count(v) == 1);
    for (const auto& v : gl_boundary_z(n)) CHECK(vset.count(v) == 1);
  }
}

TEST_CASE("window transversal is a bijection onto classes") {
  for (int n = 1; n <= 5; ++n) {
    std::set<QV> classes;
    int windowCount = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n + i; ++j)
        for (VKind k : {VKind::A, VKind::B}) {
          VertexId w{k, i, j};
          CHECK(in_window(n, w));
          QV q = qv_of_window(n, w);
          CHECK(classes.insert(q).second);
          CHECK(window_of(n, q) == w);
          ++windowCount;
        }
    CHECK(windowCount == 3 * n * (n + 1));
    CHECK((int)classes.size() == 3 * n * (n + 1));
    // every class label is hit
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= 3 * n; ++j) CHECK(classes.count(QV{i, j}) == 1);
  }
}

TEST_CASE("vertex equivalence folds periods and the seam") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= 3 * n; ++j)
        for (VKind k : {VKind::A, VKind::B}) {
          QV q = equiv_vertex(n, k, i, j);
          CHECK(equiv_vertex(n, k, i, j + 3 * n) == q);
          CHECK(equiv_vertex(n, k, i, j - 3 * n) == q);
          // the seam identification applied twice is a period
          VKind other = k == VKind::A ? VKind::B : VKind::A;
          CHECK(equiv_vertex(n, other, n - i, j - i + 2 * n) == q);
        }
}

TEST_CASE("vertex equivalence pinned value") {
  CHECK(equiv_vertex(5, VKind::B, 1, 6) == QV{4, 15});
}

TEST_CASE("edge listing inventory and canonical form") {
  for (int n = 1; n <= 5; ++n) {
    auto es = moebius_edges(n);
    CHECK((int)es.size() == 3 * n * (3 * n + 1) / 2);
    std::set<EdgeId> eset(es.begin(), es.end());
    CHECK(eset.size() == es.size());
    for (const auto& e : es) {
      CHECK(in_edge_listing(n, e));
      CHECK(canonical_edge(n, e.type, e.i, e.j) == e);
      CHECK(canonical_edge(n, e.type, e.i, e.j + 3 * n) == e);
      CHECK(canonical_edge(n, e.type, e.i, e.j - 3 * n) == e);
      // the seam partner folds back
      switch (e.type) {
        case EType::N:
          CHECK(canonical_edge(n, EType::N, n - e.i, e.j - e.i + 2 * n) == e);
          break;
        case EType::SE:
          CHECK(canonical_edge(n, EType::SW, n - e.i + 1, e.j - e.i + 2 * n) == e);
          break;
        case EType::SW:
          CHECK(canonical_edge(n, EType::SE, n - e.i + 1, e.j - e.i + 2 * n + 1) == e);
          break;
      }
    }
  }
}

TEST_CASE("edge sides agree with window incidence") {
  for (int n = 1; n <= 5; ++n) {
    // gather (window vertex, axis) -> edge from both directions
    std::map<std::pair<VertexId, int>, EdgeId> fromEdges;
    for (const auto& e : moebius_edges(n)) {
      auto sides = edge_sides(n, e);
      for (const auto& s : sides) {
        CHECK(in_window(n, s.window));
        CHECK(fromEdges.emplace(std::make_pair(s.window, s.axis), e).second);
      }
      if (!is_wrap(e)) {
        CHECK(sides[0].ray == -sides[1].ray);
      } else {
        CHECK(sides[0].ray == kE1);
        CHECK(sides[1].ray == kE2);
      }
    }
    std::map<std::pair<VertexId, int>, EdgeId> fromVertices;
    for (int i = 0; i <= n; ++i)
      for (int j = 1; j <= n + i; ++j)
        for (VKind k : {VKind::A, VKind::B}) {
          VertexId w{k, i, j};
          auto inc = window_incidence(n, w);
          bool boundary = (k == VKind::A && i == 0) || (k == VKind::B && i == n);
          CHECK(inc[2].has_value());
          CHECK(inc[0].has_value() == !boundary);
          CHECK(inc[1].has_value() == !boundary);
          for (int ax = 0; ax < 3; ++ax)
            if (inc[ax]) fromVertices.emplace(std::make_pair(w, ax), *inc[ax]);
        }
    CHECK(fromEdges == fromVertices);
  }
}

TEST_CASE("edge endpoints match side vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& e : moebius_edges(n)) {
      auto [tail, head] = edge_endpoints(n, e);
      auto sides = edge_sides(n, e);
      CHECK(qv_of_window(n, sides[0].window) == tail);
      CHECK(qv_of_window(n, sides[1].window) == head);
    }
}

TEST_CASE("wrap edges cross the seam as expected") {
  // the five wrap edges at n=5 connect A(i,1) with A(6-i,11-i)
  for (int i = 1; i <= 5; ++i) {
    EdgeId e{EType::SE, i, 1};
    CHECK(is_wrap(e));
    auto sides = edge_sides(5, e);
    CHECK(sides[0].window == VertexId{VKind::A, i, 1});
    CHECK(sides[1].window == VertexId{VKind::A, 6 - i, 11 - i});
    CHECK(canonical_edge(5, EType::SW, 6 - i, 11 - i) == e);
  }
}

TEST_CASE("hexagon inventory and folding") {
  for (int n = 1; n <= 5; ++n) {
    auto hs = moebius_hexagons(n);
    CHECK((int)hs.size() == 3 * n * (n - 1) / 2);
    for (const auto& h : hs) {
      auto c = canonical_hex(n, h.i, h.j);
      REQUIRE(c.has_value());
      CHECK(*c == h);
      CHECK(canonical_hex(n, h.i, h.j + 3 * n) == h);
      CHECK(canonical_hex(n, n - h.i, h.j - h.i + 2 * n) == h);
    }
    for (int j = 1; j <= 3 * n; ++j) {
      CHECK(!canonical_hex(n, 0, j).has_value());
      CHECK(!canonical_hex(n, n, j).has_value());
    }
  }
}

TEST_CASE("hexagon edges and neighbors are mutually consistent") {
  for (int n = 2; n <= 5; ++n) {
    std::map<EdgeId, int> sideCount;
    for (const auto& h : moebius_hexagons(n)) {
      auto es = hex_edges(n, h);
      std::set<EdgeId> distinct(es.begin(), es.end());
      CHECK(distinct.size() == 6);
      for (const auto& e : es) {
        CHECK(in_edge_listing(n, e));
        sideCount[e] += 1;
      }
      auto nbs = hex_neighbors(n, h);
      for (int k = 0; k < 6; ++k) {
        if (!nbs[(size_t)k]) continue;
        auto nes = hex_edges(n, *nbs[(size_t)k]);
        // the shared edge sits in both cycles
        bool found = false;
        for (const auto& ne : nes) found = found || ne == es[(size_t)k];
        CHECK(found);
        // reciprocity
        auto back = hex_neighbors(n, *nbs[(size_t)k]);
        bool rec = false;
        for (const auto& b : back) rec = rec || (b && *b == h);
        CHECK(rec);
      }
    }
    // hexagon side counts per edge depend only on which face rows flank it
    for (const auto& e : moebius_edges(n)) {
      int expect;
      if (e.type == EType::N)
        expect = (e.i == 0 || e.i == n) ? 0 : 2;
      else
        expect = (e.i >= 2 ? 1 : 0) + (e.i <= n - 1 ? 1 : 0);
      CHECK(sideCount[e] == expect);
    }
  }
}

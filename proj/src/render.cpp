#include "honey/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "honey/tinkertoy.hpp"

namespace honey {
namespace {

constexpr double kUnit = 20.0;  // canvas units per coordinate step; lattice spacing 2 * kUnit
constexpr double kMargin = 48.0;

struct Pt {
  double u = 0;
  double v = 0;
};

double to_double(const Rat& r) { return r.convert_to<double>(); }

Pt project(const BPoint& p) {
  const double x = to_double(p.x), y = to_double(p.y), z = to_double(p.z);
  return {kUnit * (x - y), -kUnit * (x + y - 2 * z) / std::sqrt(3.0)};
}

Pt project_ray(const Ray& r) {
  return project(BPoint(Rat(r.x), Rat(r.y), Rat(r.z)));
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v + 0.0);  // normalizes -0
  return buf;
}

struct Canvas {
  std::ostringstream body;
  double minU = std::numeric_limits<double>::max();
  double maxU = std::numeric_limits<double>::lowest();
  double minV = std::numeric_limits<double>::max();
  double maxV = std::numeric_limits<double>::lowest();

  void touch(const Pt& p) {
    minU = std::min(minU, p.u);
    maxU = std::max(maxU, p.u);
    minV = std::min(minV, p.v);
    maxV = std::max(maxV, p.v);
  }

  void line(const Pt& a, const Pt& b, const char* cls) {
    touch(a);
    touch(b);
    body << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.u) << "\" y1=\"" << fmt(a.v)
         << "\" x2=\"" << fmt(b.u) << "\" y2=\"" << fmt(b.v) << "\"/>\n";
  }

  void dot(const Pt& p, bool white) {
    touch(p);
    body << "  <circle class=\"" << (white ? "wv" : "bv") << "\" cx=\"" << fmt(p.u) << "\" cy=\""
         << fmt(p.v) << "\" r=\"3\"/>\n";
  }

  void text(const Pt& p, const std::string& s) {
    touch(p);
    body << "  <text class=\"lbl\" x=\"" << fmt(p.u) << "\" y=\"" << fmt(p.v) << "\">" << s
         << "</text>\n";
  }

  std::string finish() const {
    const double u0 = (minU > maxU ? 0 : minU) - kMargin;
    const double v0 = (minV > maxV ? 0 : minV) - kMargin;
    const double w = (minU > maxU ? 0 : maxU - minU) + 2 * kMargin;
    const double hgt = (minV > maxV ? 0 : maxV - minV) + 2 * kMargin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(u0) << " "
        << fmt(v0) << " " << fmt(w) << " " << fmt(hgt) << "\">\n"
        << "  <style>\n"
        << "    .edge { stroke: #000000; stroke-width: 1.6; }\n"
        << "    .wedge { stroke: #888888; stroke-width: 1.6; }\n"
        << "    .bdry { stroke: #000000; stroke-width: 1.0; stroke-dasharray: 3 3; }\n"
        << "    .bv { fill: #000000; }\n"
        << "    .wv { fill: #ffffff; stroke: #000000; stroke-width: 1.2; }\n"
        << "    .lbl { font-family: monospace; font-size: 10px; fill: #000000;"
        << " text-anchor: middle; }\n"
        << "  </style>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

Pt along(const Pt& from, const Pt& dir, double t) {
  return {from.u + dir.u * t, from.v + dir.v * t};
}

void boundary_ray(Canvas& cv, const Pt& from, const Ray& dir, const std::string& name,
                  const Rat& value) {
  const Pt d = project_ray(dir);
  cv.line(from, along(from, d, 1.5), "bdry");
  cv.text(along(from, d, 1.85), name + "=" + rat_to_string(value));
}

}  // namespace

std::string render_gl_svg(const GLHoneycomb& h) {
  validate_gl(h);
  Canvas cv;

  for (const GLEdge& e : gl_edges(h.n))
    cv.line(project(h.pos.at(e.tail)), project(h.pos.at(e.head)), "edge");

  const GLBoundary bd = gl_boundary(h);
  const auto bx = gl_boundary_x(h.n);
  const auto by = gl_boundary_y(h.n);
  const auto bz = gl_boundary_z(h.n);
  for (int i = 1; i <= h.n; ++i) {
    const int m = h.n - i + 1;
    boundary_ray(cv, project(h.pos.at(bx[(size_t)i - 1])), -kE1, "mu_" + std::to_string(m),
                 bd.mu[(size_t)m - 1]);
    boundary_ray(cv, project(h.pos.at(by[(size_t)i - 1])), -kE2, "nu_" + std::to_string(m),
                 bd.nu[(size_t)m - 1]);
    boundary_ray(cv, project(h.pos.at(bz[(size_t)i - 1])), -kE3, "lambda_" + std::to_string(i),
                 bd.lambda[(size_t)i - 1]);
  }

  for (const auto& [vid, p] : h.pos) {
    (void)vid;
    cv.dot(project(p), false);
  }
  return cv.finish();
}

std::string render_mh_svg(const MoebiusHoneycomb& h, const Coloring* coloring) {
  require_valid_mh(h, "render_mh_svg");
  Canvas cv;
  const int n = h.n;

  // Strip endpoints of a listed edge; the head of a wrap edge reconstructs
  // through the seam and lands outside the window.
  const auto strip_ends = [&](const EdgeId& e) -> std::pair<BPoint, BPoint> {
    const BPoint tail = reconstruct(h, VKind::A, e.i, e.j);
    switch (e.type) {
      case EType::N:
        return {tail, reconstruct(h, VKind::B, e.i, e.j)};
      case EType::SE:
        return {tail, reconstruct(h, VKind::B, e.i - 1, e.j - 1)};
      case EType::SW:
      default:
        return {tail, reconstruct(h, VKind::B, e.i - 1, e.j)};
    }
  };

  const std::vector<Rat> xi = boundary_mh(h);
  for (const EdgeId& e : moebius_edges(n)) {
    const auto [a, b] = strip_ends(e);
    const auto [p, q] = edge_endpoints(n, e);
    const bool bdry = p.i == 0 || q.i == 0;
    const bool white = coloring != nullptr && coloring->edge_white(e);
    cv.line(project(a), project(b), bdry ? "bdry" : (white ? "wedge" : "edge"));
    if (bdry && e.type == EType::N) {
      const int j = e.i == 0 ? e.j : e.j + n;  // boundary class of the edge is A(0, j)
      const Pt mid = along(project(a), {project(b).u - project(a).u, project(b).v - project(a).v},
                           0.5);
      cv.text({mid.u, mid.v - 7.0}, "xi_" + std::to_string(j) + "=" +
                                        rat_to_string(xi[(size_t)j - 1]));
    }
  }

  for (const auto& [vid, p] : h.pos) {
    const bool white = coloring != nullptr && coloring->vertex_white(qv_of_window(n, vid));
    cv.dot(project(p), white);
  }
  return cv.finish();
}

}  // namespace honey

#include "honey/honeycomb.hpp"

#include <algorithm>

namespace honey {

namespace {

std::string gl_edge_name(const GLEdge& e) {
  const char* t = e.type == EType::N ? "N" : e.type == EType::SE ? "SE" : "SW";
  return std::string(t) + " at " + e.tail.label();
}

Rat gl_edge_length(const GLHoneycomb& h, const GLEdge& e) {
  const BPoint& a = h.pos.at(e.tail);
  const BPoint& b = h.pos.at(e.head);
  switch (e.type) {
    case EType::N: return a.x - b.x;
    case EType::SW: return b.x - a.x;
    case EType::SE: return b.z - a.z;
  }
  throw InvariantError("bad edge type");
}

}  // namespace

void validate_gl(const GLHoneycomb& h) {
  if (h.n < 0) throw InputError("honeycomb: negative n");
  auto vs = gl_vertices(h.n);
  if (h.pos.size() != vs.size()) throw InputError("honeycomb: wrong number of vertices");
  for (const auto& v : vs)
    if (!h.pos.count(v)) throw InputError("honeycomb: missing vertex " + v.label());
  for (const auto& [v, p] : h.pos)
    if (p.x + p.y + p.z != 0) throw InputError("honeycomb: vertex off plane at " + v.label());
  for (const auto& e : gl_edges(h.n)) {
    if (h.pos.at(e.tail).coord(e.axis) != h.pos.at(e.head).coord(e.axis))
      throw InputError("honeycomb: drifting constant coordinate on edge " + gl_edge_name(e));
    if (gl_edge_length(h, e) < 0)
      throw InputError("honeycomb: negative length on edge " + gl_edge_name(e));
  }
}

bool is_integral_gl(const GLHoneycomb& h) {
  for (const auto& [v, p] : h.pos) {
    (void)v;
    if (!is_integer(p.x) || !is_integer(p.y) || !is_integer(p.z)) return false;
  }
  return true;
}

GLBoundary gl_boundary(const GLHoneycomb& h) {
  validate_gl(h);
  GLBoundary out;
  for (int i = 1; i <= h.n; ++i) {
    out.lambda.push_back(h.pos.at({VKind::B, 0, i}).z);
    out.mu.push_back(-h.pos.at({VKind::B, h.n - i, h.n}).x);
    out.nu.push_back(-h.pos.at({VKind::B, i - 1, i}).y);
  }
  return out;
}

GLFiber::GLFiber(const Partition& lambda, const Partition& mu, const Partition& nu, int n)
    : n_(n) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  if (n < 0) throw InputError("n must be nonnegative");
  if ((int)trim(lambda).size() > n || (int)trim(mu).size() > n || (int)trim(nu).size() > n)
    throw InputError("n is smaller than a boundary partition length");

  for (const auto& v : gl_vertices(n)) {
    base_[v] = fs_.add_slot();
    fs_.add_slot();
    fs_.add_slot();
  }
  // Sound per-axis boxes: every x lies between the extreme x pins, and
  // likewise for y and z.
  Rat xlo = 0, xhi = 0, ylo = 0, yhi = 0, zlo = 0, zhi = 0;
  if (n >= 1) {
    xlo = -part(mu, 1);
    xhi = -part(mu, n);
    ylo = -part(nu, 1);
    yhi = -part(nu, n);
    zlo = part(lambda, n);
    zhi = part(lambda, 1);
  }
  for (const auto& v : gl_vertices(n)) {
    fs_.add_linear({{slot(v, 0), Rat(1)}, {slot(v, 1), Rat(1)}, {slot(v, 2), Rat(1)}}, Rat(0),
                   true);
    fs_.bound_slot(slot(v, 0), xlo, xhi);
    fs_.bound_slot(slot(v, 1), ylo, yhi);
    fs_.bound_slot(slot(v, 2), zlo, zhi);
  }
  for (const auto& e : gl_edges(n)) {
    fs_.require_offset(slot(e.tail, e.axis), slot(e.head, e.axis), Rat(0));
    int lenAxis = e.type == EType::SE ? 2 : 0;
    bool headMinusTail = e.type != EType::N;
    int hi2 = headMinusTail ? 1 : -1;
    fs_.add_linear({{slot(e.head, lenAxis), Rat(hi2)}, {slot(e.tail, lenAxis), Rat(-hi2)}},
                   Rat(0), false);
  }
  for (int i = 1; i <= n; ++i) {
    fs_.pin_slot(slot({VKind::B, 0, i}, 2), Rat(part(lambda, i)));
    fs_.pin_slot(slot({VKind::B, i - 1, n}, 0), Rat(-part(mu, n - i + 1)));
    fs_.pin_slot(slot({VKind::B, n - i, n - i + 1}, 1), Rat(-part(nu, n - i + 1)));
  }
  fs_.freeze();
}

int GLFiber::slot(const VertexId& v, int axis) const {
  auto it = base_.find(v);
  if (it == base_.end() || axis < 0 || axis > 2)
    throw InvariantError("gl fiber: unknown slot request");
  return it->second + axis;
}

GLHoneycomb GLFiber::from_slots(const std::vector<Rat>& slotVals) const {
  GLHoneycomb h;
  h.n = n_;
  for (const auto& [v, b] : base_)
    h.pos[v] = BPoint{slotVals[(size_t)b], slotVals[(size_t)b + 1], slotVals[(size_t)b + 2]};
  return h;
}

Int GLFiber::enumerate(const std::function<bool(const GLHoneycomb&)>& visit) const {
  if (!fs_.feasible()) return 0;
  return fs_.enumerate_integral(
      [&](const std::vector<Rat>& vals) { return visit(from_slots(vals)); });
}

Int GLFiber::count() const {
  return enumerate([](const GLHoneycomb&) { return true; });
}

Int count_lr(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
  return GLFiber(lambda, mu, nu, n).count();
}

Int count_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  size_t n = std::max({trim(lambda).size(), trim(mu).size(), trim(nu).size()});
  return count_lr(lambda, mu, nu, (int)n);
}

}  // namespace honey

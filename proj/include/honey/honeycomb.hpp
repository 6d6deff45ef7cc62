#pragma once

#include <functional>
#include <map>
#include <vector>

#include "honey/fiber.hpp"
#include "honey/tinkertoy.hpp"

namespace honey {

// Triangular honeycomb: positions for every vertex of the triangular
// tinkertoy, all in the plane x + y + z = 0, with each edge keeping its
// constant coordinate and having nonnegative length.
struct GLHoneycomb {
  int n = 0;
  std::map<VertexId, BPoint> pos;
  bool operator==(const GLHoneycomb&) const = default;
};

// Throws InputError naming the offending vertex or edge.
void validate_gl(const GLHoneycomb& h);

bool is_integral_gl(const GLHoneycomb& h);

// Boundary read off the whisker pins, in reading order:
//   lambda_i = z(B(0,i)),  mu_i = -x(B(n-i,n)),  nu_i = -y(B(i-1,i)).
struct GLBoundary {
  std::vector<Rat> lambda, mu, nu;
};
GLBoundary gl_boundary(const GLHoneycomb& h);

// The fiber of triangular honeycombs over a fixed boundary. Integral points
// of the fiber are counted by the Littlewood-Richardson coefficient.
class GLFiber {
 public:
  GLFiber(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

  int n() const { return n_; }
  int slot(const VertexId& v, int axis) const;
  const FiberSystem& system() const { return fs_; }
  GLHoneycomb from_slots(const std::vector<Rat>& slotVals) const;

  // Enumerates integral honeycombs; visit returns false to stop early.
  Int enumerate(const std::function<bool(const GLHoneycomb&)>& visit) const;
  Int count() const;

 private:
  int n_;
  FiberSystem fs_;
  std::map<VertexId, int> base_;
};

// Number of integral triangular honeycombs with boundary (lambda, mu, nu).
Int count_lr(const Partition& lambda, const Partition& mu, const Partition& nu, int n);
Int count_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace honey

#include "honey/moebius.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace honey {

namespace {

Rat two() { return Rat(2); }

BPoint period_shift(const BPoint& p, long long m, const Rat& delta) {
  Rat s = Rat(3 * m) * delta;
  return {p.x + s, p.y + s, p.z - two() * s};
}

// Window column count for row i is n+i, for rows 0..n.
bool in_window_range(int n, int i, int j) {
  return i >= 0 && i <= n && j >= 1 && j <= n + i;
}

template <typename Fn>
void for_each_window(int n, Fn fn) {
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n + i; ++j) {
      fn(VertexId{VKind::A, i, j});
      fn(VertexId{VKind::B, i, j});
    }
  }
}

const BPoint& at(const MoebiusHoneycomb& h, VKind kind, int i, int j) {
  return h.pos.at(VertexId{kind, i, j});
}

void check_structure(const MoebiusHoneycomb& h) {
  if (h.n < 1) throw InputError("moebius honeycomb needs n >= 1");
  if (h.delta <= 0) throw InputError("moebius honeycomb needs delta > 0");
  std::size_t expected = 0;
  for (int i = 0; i <= h.n; ++i) expected += std::size_t(2) * (h.n + i);
  if (h.pos.size() != expected)
    throw InputError("moebius honeycomb has wrong vertex count");
  for (const auto& [v, p] : h.pos) {
    (void)p;
    if (!in_window_range(h.n, v.i, v.j))
      throw InputError("vertex outside window: " + v.label());
  }
}

// First violated validity condition, if any. Assumes check_structure passed.
std::optional<std::string> mh_violation(const MoebiusHoneycomb& h) {
  const int n = h.n;
  const Rat& d = h.delta;
  std::optional<std::string> bad;
  for_each_window(n, [&](const VertexId& v) {
    if (bad) return;
    const BPoint& p = h.pos.at(v);
    if (p.x + p.y + p.z != 0) bad = "vertex off plane: " + v.label();
  });
  if (bad) return bad;

  // Pin structure on the two boundary rows.
  for (int j = 1; j <= n; ++j) {
    if (at(h, VKind::A, 0, j).x != -two() * d)
      return "boundary pin broken at " + VertexId{VKind::A, 0, j}.label();
  }
  for (int w = 1; w <= 2 * n; ++w) {
    Rat want = w <= n ? -two() * d : -d;
    if (at(h, VKind::B, n, w).y != want)
      return "boundary pin broken at " + VertexId{VKind::B, n, w}.label();
  }

  // Edge constancy and nonnegative lengths.
  for (const EdgeId& e : moebius_edges(n)) {
    const int i = e.i, j = e.j;
    switch (e.type) {
      case EType::N: {
        const BPoint& a = at(h, VKind::A, i, j);
        const BPoint& b = at(h, VKind::B, i, j);
        if (a.z != b.z) return "edge not axis aligned: " + e.label();
        if (a.x < b.x) return "negative length at " + e.label();
        break;
      }
      case EType::SW: {
        const BPoint& a = at(h, VKind::A, i, j);
        const BPoint& b = at(h, VKind::B, i - 1, j);
        if (a.y != b.y) return "edge not axis aligned: " + e.label();
        if (b.x < a.x) return "negative length at " + e.label();
        break;
      }
      case EType::SE: {
        const BPoint& a = at(h, VKind::A, i, j);
        if (j >= 2) {
          const BPoint& b = at(h, VKind::B, i - 1, j - 1);
          if (a.x != b.x) return "edge not axis aligned: " + e.label();
          if (b.z < a.z) return "negative length at " + e.label();
        } else {
          // Wrap edge: the head develops to T of the seam partner.
          const BPoint& q = at(h, VKind::A, n - i + 1, 2 * n - i + 1);
          if (a.x != q.y - two() * d) return "edge not axis aligned: " + e.label();
          if (q.z + Rat(3) * d < a.z) return "negative length at " + e.label();
        }
        break;
      }
    }
  }

  // Boundary values confined to their blocks.
  for (int j = 1; j <= 3 * n; ++j) {
    Rat xi = j <= n ? at(h, VKind::A, 0, j).z : at(h, VKind::B, n, j - n).z - Rat(3) * d;
    Rat lo = j <= n ? Rat(4) * d : (j <= 2 * n ? two() * d : Rat(0));
    if (xi < lo || xi > lo + d) {
      std::ostringstream os;
      os << "boundary value out of range at position " << j;
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace

BPoint seam_S(const BPoint& p, const Rat& delta) {
  return {p.y + delta, p.x + two() * delta, p.z - Rat(3) * delta};
}

BPoint seam_T(const BPoint& p, const Rat& delta) {
  return {p.y - two() * delta, p.x - delta, p.z + Rat(3) * delta};
}

BPoint reconstruct(const MoebiusHoneycomb& h, VKind kind, int i, int j) {
  const int n = h.n;
  if (i < 0 || i > n) throw InputError("reconstruct: row out of range");
  int j0 = reduce_j(n, j);
  long long m = (static_cast<long long>(j) - j0) / (3 * n);
  BPoint p;
  if (j0 <= n + i) {
    p = h.pos.at(VertexId{kind, i, j0});
  } else {
    // Seam partner of the other kind, one step down the strip.
    VKind other = kind == VKind::A ? VKind::B : VKind::A;
    p = seam_S(h.pos.at(VertexId{other, n - i, j0 - i - n}), h.delta);
  }
  return period_shift(p, m, h.delta);
}

bool validate_mh(const MoebiusHoneycomb& h) {
  check_structure(h);
  return !mh_violation(h).has_value();
}

void require_valid_mh(const MoebiusHoneycomb& h, const std::string& what) {
  check_structure(h);
  if (auto bad = mh_violation(h)) throw InputError(what + ": " + *bad);
}

bool is_integral(const MoebiusHoneycomb& h) {
  if (!is_integer(h.delta)) return false;
  for (const auto& [v, p] : h.pos) {
    (void)v;
    if (!is_integer(p.x) || !is_integer(p.y) || !is_integer(p.z)) return false;
  }
  return true;
}

std::vector<Rat> boundary_mh(const MoebiusHoneycomb& h) {
  std::vector<Rat> xi;
  xi.reserve(3 * h.n);
  for (int j = 1; j <= 3 * h.n; ++j) xi.push_back(reconstruct(h, VKind::A, 0, j).z);
  return xi;
}

std::vector<Rat> xi_from_partitions(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, long long delta, int n) {
  require_partition(lambda, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  if (n < 1) throw InputError("n must be at least 1");
  for (const Partition* p : {&lambda, &mu, &nu}) {
    if (static_cast<int>(trim(*p).size()) > n)
      throw InputError("partition has more than n parts");
  }
  if (delta < 1) throw InputError("inadmissible delta rejected: delta must be positive");
  for (const Partition* p : {&lambda, &mu, &nu}) {
    if (!p->empty() && part(*p, 1) > delta)
      throw InputError("inadmissible delta rejected: delta below largest part");
  }
  std::vector<Rat> xi;
  xi.reserve(3 * n);
  for (int j = 1; j <= n; ++j) xi.emplace_back(part(lambda, j) + 4 * delta);
  for (int j = 1; j <= n; ++j) xi.emplace_back(part(mu, j) + 2 * delta);
  for (int j = 1; j <= n; ++j) xi.emplace_back(part(nu, j));
  return xi;
}

MoebiusHoneycomb combine(const Rat& c1, const MoebiusHoneycomb& h1, const Rat& c2,
                         const MoebiusHoneycomb& h2) {
  if (c1 < 0 || c2 < 0) throw InputError("combine: coefficients must be nonnegative");
  if (c1 + c2 == 0) throw InputError("combine: coefficients must not both vanish");
  if (h1.n != h2.n) throw InputError("combine: size mismatch");
  if (h1.delta != h2.delta) throw InputError("combine: scale mismatch");
  require_valid_mh(h1, "combine");
  require_valid_mh(h2, "combine");
  MoebiusHoneycomb out;
  out.n = h1.n;
  out.delta = (c1 + c2) * h1.delta;
  for (const auto& [v, p] : h1.pos) out.pos[v] = c1 * p + c2 * h2.pos.at(v);
  if (!validate_mh(out)) throw InvariantError("combine: result failed validation");
  return out;
}

MoebiusFiber::MoebiusFiber(const std::vector<Rat>& xi, const Rat& delta, int n)
    : n_(n), delta_(delta) {
  if (n < 1) throw InputError("moebius fiber needs n >= 1");
  if (delta <= 0) throw InputError("moebius fiber needs delta > 0");
  if (static_cast<int>(xi.size()) != 3 * n)
    throw InputError("boundary vector must have length 3n");

  for_each_window(n, [&](const VertexId& v) {
    base_[v] = fs_.add_slot();
    fs_.add_slot();
    fs_.add_slot();
  });
  const Rat d = delta;

  // Boundary blocks must sit in their admissible ranges; otherwise the fiber
  // is empty by fiat of a contradictory constant row.
  bool xiOk = true;
  for (int j = 1; j <= 3 * n; ++j) {
    Rat lo = j <= n ? Rat(4) * d : (j <= 2 * n ? two() * d : Rat(0));
    if (xi[j - 1] < lo || xi[j - 1] > lo + d) xiOk = false;
  }
  if (!xiOk) {
    fs_.add_linear({}, Rat(1), true);
    fs_.freeze();
    return;
  }

  for_each_window(n, [&](const VertexId& v) {
    fs_.add_linear({{base_[v], 1}, {base_[v] + 1, 1}, {base_[v] + 2, 1}}, Rat(0), true);
    // Containment box for the vertex's rhombus, by column block.
    Rat xlo, xhi, ylo, yhi;
    if (v.j <= n && v.i < v.j) {
      xlo = -3 * d, xhi = -2 * d, ylo = -3 * d, yhi = -2 * d;
    } else if (v.j <= n) {
      xlo = -4 * d, xhi = -3 * d, ylo = -3 * d, yhi = -2 * d;
    } else {
      xlo = -3 * d, xhi = -2 * d, ylo = -2 * d, yhi = -d;
    }
    fs_.bound_slot(base_[v], xlo, xhi);
    fs_.bound_slot(base_[v] + 1, ylo, yhi);
    fs_.bound_slot(base_[v] + 2, -xhi - yhi, -xlo - ylo);
  });

  auto slot_of = [&](VKind kind, int i, int j, int axis) {
    return base_.at(VertexId{kind, i, j}) + axis;
  };

  for (const EdgeId& e : moebius_edges(n)) {
    const int i = e.i, j = e.j;
    switch (e.type) {
      case EType::N:
        fs_.require_offset(slot_of(VKind::A, i, j, 2), slot_of(VKind::B, i, j, 2), Rat(0));
        fs_.add_linear({{slot_of(VKind::A, i, j, 0), 1}, {slot_of(VKind::B, i, j, 0), -1}},
                       Rat(0), false);
        break;
      case EType::SW:
        fs_.require_offset(slot_of(VKind::A, i, j, 1), slot_of(VKind::B, i - 1, j, 1), Rat(0));
        fs_.add_linear({{slot_of(VKind::B, i - 1, j, 0), 1}, {slot_of(VKind::A, i, j, 0), -1}},
                       Rat(0), false);
        break;
      case EType::SE:
        if (j >= 2) {
          fs_.require_offset(slot_of(VKind::A, i, j, 0), slot_of(VKind::B, i - 1, j - 1, 0),
                             Rat(0));
          fs_.add_linear(
              {{slot_of(VKind::B, i - 1, j - 1, 2), 1}, {slot_of(VKind::A, i, j, 2), -1}},
              Rat(0), false);
        } else {
          int u = n - i + 1, w = 2 * n - i + 1;
          fs_.require_offset(slot_of(VKind::A, i, 1, 0), slot_of(VKind::A, u, w, 1),
                             -two() * d);
          fs_.add_linear({{slot_of(VKind::A, u, w, 2), 1}, {slot_of(VKind::A, i, 1, 2), -1}},
                         Rat(-3) * d, false);
        }
        break;
    }
  }

  for (int j = 1; j <= n; ++j) {
    fs_.pin_slot(slot_of(VKind::A, 0, j, 0), -two() * d);
    fs_.pin_slot(slot_of(VKind::A, 0, j, 1), two() * d - xi[j - 1]);
    fs_.pin_slot(slot_of(VKind::A, 0, j, 2), xi[j - 1]);
  }
  for (int w = 1; w <= 2 * n; ++w) {
    const Rat& v = xi[n + w - 1];
    Rat yPin = w <= n ? -two() * d : -d;
    fs_.pin_slot(slot_of(VKind::B, n, w, 0), -yPin - v - Rat(3) * d);
    fs_.pin_slot(slot_of(VKind::B, n, w, 1), yPin);
    fs_.pin_slot(slot_of(VKind::B, n, w, 2), v + Rat(3) * d);
  }
  fs_.freeze();
}

int MoebiusFiber::slot(const VertexId& window, int axis) const {
  return base_.at(window) + axis;
}

MoebiusHoneycomb MoebiusFiber::from_slots(const std::vector<Rat>& slotVals) const {
  MoebiusHoneycomb h;
  h.n = n_;
  h.delta = delta_;
  for (const auto& [v, b] : base_)
    h.pos[v] = BPoint{slotVals[b], slotVals[b + 1], slotVals[b + 2]};
  return h;
}

Int MoebiusFiber::enumerate(const std::function<bool(const MoebiusHoneycomb&)>& visit) const {
  if (!fs_.feasible()) return 0;
  return fs_.enumerate_integral(
      [&](const std::vector<Rat>& slotVals) { return visit(from_slots(slotVals)); });
}

Int MoebiusFiber::count() const {
  return enumerate([](const MoebiusHoneycomb&) { return true; });
}

Int count_nl(const Partition& lambda, const Partition& mu, const Partition& nu,
             long long delta, int n) {
  std::vector<Rat> xi = xi_from_partitions(lambda, mu, nu, delta, n);
  return MoebiusFiber(xi, Rat(delta), n).count();
}

Int count_nl(const Partition& lambda, const Partition& mu, const Partition& nu) {
  long long delta = 1;
  int n = 1;
  for (const Partition* p : {&lambda, &mu, &nu}) {
    Partition t = trim(*p);
    if (!t.empty()) delta = std::max(delta, t[0]);
    n = std::max(n, static_cast<int>(t.size()));
  }
  return count_nl(lambda, mu, nu, delta, n);
}

namespace {

// Shared segment values of a valid honeycomb, in the reading order that makes
// the three split pieces carry boundaries (lambda; beta, gamma),
// (mu; gamma, alpha), (nu; alpha, beta).
struct SharedSegments {
  std::vector<Rat> alpha, beta, gamma;
};

SharedSegments read_segments(const MoebiusHoneycomb& h) {
  const int n = h.n;
  const Rat& d = h.delta;
  SharedSegments s;
  for (int i = 1; i <= n; ++i) {
    Rat a1 = -at(h, VKind::A, n - i + 1, 1).x - Rat(3) * d;
    Rat a2 = -at(h, VKind::A, i, n + i).y - d;
    Rat b1 = -at(h, VKind::B, n - i, n).x - two() * d;
    Rat b2 = -at(h, VKind::A, n - i + 1, n + 1).x - two() * d;
    Rat g1 = -at(h, VKind::A, i, i).y - two() * d;
    Rat g2 = -at(h, VKind::B, i - 1, i).y - two() * d;
    if (a1 != a2 || b1 != b2 || g1 != g2)
      throw InvariantError("split: shared segment readings disagree");
    s.alpha.push_back(a1);
    s.beta.push_back(b1);
    s.gamma.push_back(g1);
  }
  return s;
}

Partition to_partition(const std::vector<Rat>& vals, const Rat& delta, const char* name) {
  Partition p;
  for (const Rat& v : vals) {
    if (!is_integer(v) || v < 0 || v > delta)
      throw InvariantError(std::string("split: ") + name + " outside [0, delta]");
    p.push_back(to_longlong(rat_floor(v)));
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i - 1] < p[i])
      throw InvariantError(std::string("split: ") + name + " is not a partition");
  }
  return p;
}

GLHoneycomb checked_gl(GLHoneycomb piece, const char* name) {
  try {
    validate_gl(piece);
  } catch (const InputError& e) {
    throw InvariantError(std::string("split: ") + name + " piece invalid: " + e.what());
  }
  return piece;
}

}  // namespace

MoebiusHoneycomb glue(const GLHoneycomb& hl, const GLHoneycomb& hm, const GLHoneycomb& hn,
                      const Rat& delta) {
  validate_gl(hl);
  validate_gl(hm);
  validate_gl(hn);
  const int n = hl.n;
  if (hm.n != n || hn.n != n) throw InputError("glue: boundary mismatch: sizes differ");
  if (n < 1) throw InputError("glue: needs n >= 1");
  if (delta <= 0) throw InputError("glue: delta must be positive");
  GLBoundary bl = gl_boundary(hl), bm = gl_boundary(hm), bn = gl_boundary(hn);
  if (bl.nu != bm.mu || bm.nu != bn.mu || bn.nu != bl.mu)
    throw InputError("glue: boundary mismatch: shared segments disagree");
  for (const GLBoundary* b : {&bl, &bm, &bn}) {
    for (const Rat& part : b->lambda) {
      if (part > delta) throw InputError("glue: delta below largest part");
    }
  }

  const Rat d = delta;
  const BPoint offL{-two() * d, -two() * d, Rat(4) * d};
  const BPoint offM{-d, -d, two() * d};
  MoebiusHoneycomb out;
  out.n = n;
  out.delta = d;

  for (const auto& [v, p] : hl.pos) out.pos[v] = p + offL;
  for (int j = 1; j <= n; ++j) {
    const Rat& lj = bl.lambda[j - 1];
    out.pos[VertexId{VKind::A, 0, j}] = BPoint{-two() * d, -lj - two() * d, lj + Rat(4) * d};
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= u; ++v) {
      out.pos[VertexId{VKind::A, u, v}] =
          seam_T(hm.pos.at(VertexId{VKind::B, n - u, n - u + v}) + offM, d);
      out.pos[VertexId{VKind::A, u, n + v}] =
          seam_T(hn.pos.at(VertexId{VKind::B, n - u, n - u + v}), d);
      if (u < n) {
        out.pos[VertexId{VKind::B, u, v}] =
            seam_T(hm.pos.at(VertexId{VKind::A, n - u, n - u + v}) + offM, d);
        out.pos[VertexId{VKind::B, u, n + v}] =
            seam_T(hn.pos.at(VertexId{VKind::A, n - u, n - u + v}), d);
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    const Rat& mv = bm.lambda[v - 1];
    const Rat& nv = bn.lambda[v - 1];
    out.pos[VertexId{VKind::B, n, v}] = BPoint{-mv - Rat(3) * d, -two() * d, mv + Rat(5) * d};
    out.pos[VertexId{VKind::B, n, n + v}] = BPoint{-nv - two() * d, -d, nv + Rat(3) * d};
  }
  require_valid_mh(out, "glue");
  return out;
}

SplitResult split(const MoebiusHoneycomb& h) {
  require_valid_mh(h, "split");
  if (!is_integral(h)) throw InputError("split requires an integral honeycomb");
  const int n = h.n;
  const Rat d = h.delta;
  SharedSegments seg = read_segments(h);

  SplitResult out;
  out.alpha = to_partition(seg.alpha, d, "alpha");
  out.beta = to_partition(seg.beta, d, "beta");
  out.gamma = to_partition(seg.gamma, d, "gamma");

  const BPoint offL{-two() * d, -two() * d, Rat(4) * d};
  const BPoint offM{-d, -d, two() * d};
  GLHoneycomb hl, hm, hn;
  hl.n = hm.n = hn.n = n;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (i >= 1) {
        hl.pos[VertexId{VKind::A, i, j}] = at(h, VKind::A, i, j) - offL;
        hm.pos[VertexId{VKind::A, i, j}] = seam_S(at(h, VKind::B, n - i, j - i), d) - offM;
        hn.pos[VertexId{VKind::A, i, j}] = seam_S(at(h, VKind::B, n - i, n + j - i), d);
      }
      hl.pos[VertexId{VKind::B, i, j}] = at(h, VKind::B, i, j) - offL;
      hm.pos[VertexId{VKind::B, i, j}] = seam_S(at(h, VKind::A, n - i, j - i), d) - offM;
      hn.pos[VertexId{VKind::B, i, j}] = seam_S(at(h, VKind::A, n - i, n + j - i), d);
    }
  }
  out.lambdaPiece = checked_gl(std::move(hl), "lambda");
  out.muPiece = checked_gl(std::move(hm), "mu");
  out.nuPiece = checked_gl(std::move(hn), "nu");
  return out;
}

}  // namespace honey

#include "honey/core.hpp"

#include <algorithm>
#include <limits>

namespace honey {

Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);  // always > 0
  Int q = num / den;                                // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int rat_ceil(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

bool is_half_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 2; }

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Int parse_plain_int(const std::string& s) {
  if (s.empty()) throw InputError("empty integer literal");
  size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw InputError("bad integer literal '" + s + "'");
  for (size_t k = start; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw InputError("bad integer literal '" + s + "'");
  return Int(s);
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_plain_int(s));
  Int num = parse_plain_int(s.substr(0, slash));
  Int den = parse_plain_int(s.substr(slash + 1));
  if (den <= 0) throw InputError("bad rational literal '" + s + "'");
  return Rat(num, den);
}

long long to_longlong(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw InputError("integer out of 64-bit range: " + v.str());
  return static_cast<long long>(v);
}

long long rat_to_longlong(const Rat& r) {
  if (!is_integer(r)) throw InputError("expected an integer, got " + rat_to_string(r));
  return to_longlong(boost::multiprecision::numerator(r));
}

const Rat& BPoint::coord(int axis) const {
  switch (axis) {
    case 0: return x;
    case 1: return y;
    case 2: return z;
  }
  throw InvariantError("BPoint axis out of range");
}

Rat& BPoint::coord(int axis) {
  switch (axis) {
    case 0: return x;
    case 1: return y;
    case 2: return z;
  }
  throw InvariantError("BPoint axis out of range");
}

std::string BPoint::str() const {
  return "(" + rat_to_string(x) + "," + rat_to_string(y) + "," + rat_to_string(z) + ")";
}

bool is_partition(const Partition& p) {
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 0) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

void require_partition(const Partition& p, const std::string& name) {
  if (!is_partition(p))
    throw InputError(name + " is not a partition (need weakly decreasing nonnegative parts)");
}

long long part(const Partition& p, size_t i) {
  if (i == 0) throw InvariantError("partition parts are 1-based");
  return i <= p.size() ? p[i - 1] : 0;
}

long long weight(const Partition& p) {
  long long w = 0;
  for (long long v : p) w += v;
  return w;
}

Partition trim(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Partition pad(const Partition& p, size_t len) {
  Partition q = trim(p);
  if (q.size() > len)
    throw InputError("partition has " + std::to_string(q.size()) + " parts, more than " +
                     std::to_string(len));
  q.resize(len, 0);
  return q;
}

Partition scaled(const Partition& p, long long k) {
  Partition q = p;
  for (auto& v : q) v *= k;
  return q;
}

namespace {

void gen_partitions(Partition& cur, int pos, int maxParts, long long cap,
                    const std::function<void(const Partition&)>& fn) {
  if (pos == maxParts) {
    fn(cur);
    return;
  }
  for (long long v = cap; v >= 0; --v) {
    cur[pos] = v;
    gen_partitions(cur, pos + 1, maxParts, v, fn);
  }
  cur[pos] = 0;
}

}  // namespace

void for_each_partition(int maxParts, long long maxPart,
                        const std::function<void(const Partition&)>& fn) {
  if (maxParts < 0 || maxPart < 0) throw InputError("negative partition bounds");
  Partition cur(maxParts, 0);
  if (maxParts == 0) {
    fn(cur);
    return;
  }
  gen_partitions(cur, 0, maxParts, maxPart, fn);
}

std::string VertexId::label() const {
  return std::string(kind == VKind::A ? "A" : "B") + ":" + std::to_string(i) + ":" +
         std::to_string(j);
}

VertexId parse_vertex_label(const std::string& s) {
  auto c1 = s.find(':');
  auto c2 = (c1 == std::string::npos) ? std::string::npos : s.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw InputError("bad vertex label '" + s + "'");
  std::string kind = s.substr(0, c1);
  VertexId v;
  if (kind == "A")
    v.kind = VKind::A;
  else if (kind == "B")
    v.kind = VKind::B;
  else
    throw InputError("bad vertex label '" + s + "'");
  try {
    size_t used = 0;
    std::string si = s.substr(c1 + 1, c2 - c1 - 1), sj = s.substr(c2 + 1);
    v.i = std::stoi(si, &used);
    if (used != si.size()) throw std::invalid_argument(si);
    v.j = std::stoi(sj, &used);
    if (used != sj.size()) throw std::invalid_argument(sj);
  } catch (const std::exception&) {
    throw InputError("bad vertex label '" + s + "'");
  }
  return v;
}

}  // namespace honey

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace honey {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Malformed or inadmissible caller input. The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee of the theory failed at runtime. The CLI maps this
// to exit code 2. Seeing one of these means a bug, not bad input.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
bool is_integer(const Rat& r);
bool is_half_integer(const Rat& r);  // true iff r lies in Z + 1/2

// "p" or "p/q" with q > 1; parse_rat accepts both forms and throws InputError
// on anything else. These two are exact inverses.
std::string rat_to_string(const Rat& r);
Rat parse_rat(const std::string& s);

long long to_longlong(const Int& v);  // checked narrowing
long long rat_to_longlong(const Rat& r);

// Point of the plane x + y + z = 0 (every vertex of every honeycomb here
// lives on that plane; the invariant is checked by the validators, not the
// type).
struct BPoint {
  Rat x, y, z;

  BPoint() = default;
  BPoint(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

  const Rat& coord(int axis) const;
  Rat& coord(int axis);

  friend BPoint operator+(const BPoint& a, const BPoint& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend BPoint operator-(const BPoint& a, const BPoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend BPoint operator*(const Rat& c, const BPoint& p) { return {c * p.x, c * p.y, c * p.z}; }
  friend bool operator==(const BPoint& a, const BPoint& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  std::string str() const;
};

// Partitions are weakly decreasing vectors of nonnegative integers. Trailing
// zeros are allowed and compare equal after trim().
using Partition = std::vector<long long>;

bool is_partition(const Partition& p);
void require_partition(const Partition& p, const std::string& name);
long long part(const Partition& p, size_t i);  // 1-based, 0 past the end
long long weight(const Partition& p);
Partition trim(Partition p);
// Zero-pad to exactly len entries; throws InputError if p has more than len
// nonzero parts.
Partition pad(const Partition& p, size_t len);
Partition scaled(const Partition& p, long long k);

// Visit every partition with at most maxParts parts, each at most maxPart,
// padded to maxParts entries. Deterministic (lexicographic) order.
void for_each_partition(int maxParts, long long maxPart,
                        const std::function<void(const Partition&)>& fn);

enum class VKind : uint8_t { A, B };

struct VertexId {
  VKind kind = VKind::A;
  int i = 0;
  int j = 0;

  auto operator<=>(const VertexId&) const = default;
  std::string label() const;  // "A:i:j"
};

VertexId parse_vertex_label(const std::string& s);  // inverse of label()

}  // namespace honey

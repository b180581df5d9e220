#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/errors.hpp"

namespace latknot {

struct Point3 {
  std::int64_t x = 0, y = 0, z = 0;

  auto operator<=>(const Point3 &) const = default;
  std::int64_t operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  std::int64_t &operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
  Point3 operator+(const Point3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point3 operator-(const Point3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point3 operator*(std::int64_t s) const { return {x * s, y * s, z * s}; }
};

struct Point3Hash {
  std::size_t operator()(const Point3 &p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(p.z) + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Axis index (0, 1, 2) along which a and b differ, or -1 unless they differ in exactly one coordinate.
int stick_axis(const Point3 &a, const Point3 &b);

/// Closed axis-parallel lattice polygon given by its corners in cyclic order.
struct LatticeKnot {
  std::vector<Point3> corners;

  bool operator==(const LatticeKnot &) const = default;
  std::size_t corner_count() const { return corners.size(); }
};

struct Stick {
  Point3 from, to;
  int axis;
  std::int64_t length;
};

std::vector<Stick> sticks(const LatticeKnot &k);

/// Every lattice point visited by the knot, one per unit edge, in traversal order.
std::vector<Point3> unit_points(const LatticeKnot &k);

/// Merges colinear sticks, drops zero-length sticks and rotates the list so it
/// starts at the least corner. Throws DegenerateCurve below four corners.
LatticeKnot canonicalize(const LatticeKnot &k);

/// Builds a canonical knot from a closed walk of unit steps.
LatticeKnot from_unit_points(const std::vector<Point3> &points);

enum class LatticeViolation {
  TooFewCorners,
  NotClosed,
  NotAxisParallel,
  ColinearCorner,
  ZeroLengthStick,
  SelfIntersection,
};

struct LatticeIssue {
  LatticeViolation kind;
  std::string detail;
};

using LatticeReport = std::vector<LatticeIssue>;

LatticeReport validate_lattice(const LatticeKnot &k);
bool has_violation(const LatticeReport &report, LatticeViolation kind);

/// Header fields written above the corner list.
struct LatticeHeader {
  std::map<std::string, std::string> fields;
};

std::string serialize_lattice(const LatticeKnot &k, const LatticeHeader &header = {});
LatticeKnot parse_lattice(std::string_view text, LatticeHeader *header = nullptr);

/// Single-line `[[x,y,z],...]` form.
std::string lattice_to_json_array(const LatticeKnot &k);
LatticeKnot lattice_from_json_array(std::string_view text);

} // namespace latknot

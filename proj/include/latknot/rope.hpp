#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/lattice.hpp"

namespace latknot {

/// One piece of a smoothed knot in doubled coordinates. Segments run from p0 to
/// p1. Arcs are quarter circles of radius 1: center + cos(a)*u + sin(a)*v for
/// a in [0, pi/2], so they start at center + u and end at center + v.
struct Piece {
  enum class Kind { Segment, Arc };
  Kind kind = Kind::Segment;
  Point3 p0, p1;
  Point3 center, u, v;
  bool operator==(const Piece &) const = default;
};

/// Alternating segments and arcs; piece 2i is the segment along stick i and
/// piece 2i+1 the arc at the corner where stick i ends.
struct SmoothKnot {
  std::vector<Piece> pieces;
  bool operator==(const SmoothKnot &) const = default;
};

struct RopeMetrics {
  /// Length is straight_length + arc_count * pi/2.
  std::int64_t straight_length = 0;
  std::int64_t arc_count = 0;
  std::int64_t corner_count = 0;
  double length = 0;
  double min_curvature_radius = 1;
  /// Smallest distance between points whose arclength separation is at least pi,
  /// capped at 2 (the scan stops looking once clearance 2 is certain).
  double min_doubled_self_distance = 2;
  /// Certified lower bound on the true self-distance (scan tolerance removed).
  double self_distance_lower = 2;
  double thickness_radius = 1;
  double ropelength = 0;
  /// Pieces realizing min_doubled_self_distance, or -1 if none came closer than 2.
  int closest_piece_a = -1, closest_piece_b = -1;
};

/// Doubles the knot and rounds every corner with a unit quarter circle.
/// Throws DegenerateKnot on a zero-length stick.
SmoothKnot smooth(const LatticeKnot &k);

/// Closed-form length plus a certified scan of the self-distance; tolerance is
/// the absolute error allowed on that distance.
RopeMetrics rope_metrics(const SmoothKnot &s, double tolerance = 1e-10);

Point3 piece_start(const Piece &p);
Point3 piece_end(const Piece &p);
/// Start and end unit tangents (integer axis vectors; zero for an empty segment).
Point3 piece_start_tangent(const Piece &p);
Point3 piece_end_tangent(const Piece &p);

enum class ExportFormat { Polyline, ArcExact };

/// Polyline mode samples `density` points per arc (at least 8) plus segment
/// endpoints, one `x y z` per line. Arc-exact mode writes SEG and ARC records.
std::string export_geometry(const SmoothKnot &s, ExportFormat format, int density = 32);

std::vector<std::array<double, 3>> import_polyline(std::string_view text);
SmoothKnot import_arc_exact(std::string_view text);

} // namespace latknot

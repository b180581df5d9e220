#include "latknot/fold.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace latknot {

namespace {

constexpr int kX = 0, kY = 1, kZ = 2;

Point3 unit(int axis, std::int64_t sign) {
  Point3 p;
  p[axis] = sign;
  return p;
}

bool adjacent(const Point3 &a, const Point3 &b) {
  const Point3 d = a - b;
  return std::abs(d.x) + std::abs(d.y) + std::abs(d.z) == 1;
}

std::vector<Point3> walk_from_corners(const std::vector<Point3> &corners) {
  std::vector<Point3> c;
  for (const Point3 &p : corners)
    if (c.empty() || c.back() != p) c.push_back(p);
  while (c.size() > 1 && c.front() == c.back()) c.pop_back();
  return unit_points(LatticeKnot{c});
}

/// Cancels every step immediately followed by its inverse (cyclically).
/// Returns the number of unit edges removed on each axis.
std::array<std::int64_t, 3> cancel_backtracks(std::vector<Point3> &walk) {
  std::array<std::int64_t, 3> removed{0, 0, 0};
  if (walk.size() < 2) return removed;
  std::deque<Point3> steps;
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 d = walk[(i + 1) % n] - walk[i];
    if (!steps.empty() && steps.back() + d == Point3{}) {
      removed[stick_axis(Point3{}, d)] += 2;
      steps.pop_back();
    } else {
      steps.push_back(d);
    }
  }
  Point3 start = walk.front();
  while (steps.size() >= 2 && steps.front() + steps.back() == Point3{}) {
    removed[stick_axis(Point3{}, steps.front())] += 2;
    start = start + steps.front();
    steps.pop_front();
    steps.pop_back();
  }
  walk.clear();
  Point3 p = start;
  for (const Point3 &d : steps) {
    walk.push_back(p);
    p = p + d;
  }
  return removed;
}

std::optional<Point3> first_repeat(const std::vector<Point3> &walk) {
  std::unordered_set<Point3, Point3Hash> seen;
  for (const Point3 &p : walk)
    if (!seen.insert(p).second) return p;
  return std::nullopt;
}

std::string point_str(const Point3 &p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

void add_delta(FoldReport &r, const EdgeCensus &before, const EdgeCensus &after) {
  for (int a = 0; a < 3; ++a) {
    const std::int64_t d = after.edges(a) - before.edges(a);
    if (d > 0) r.added[a] += d;
    else r.removed[a] -= d;
  }
}

/// Moves stick i of a canonical knot one unit along `dir`, stretching or
/// shrinking its neighbours. Returns nothing if the result is not self-avoiding.
std::optional<LatticeKnot> shift_stick(const LatticeKnot &k, std::size_t i, const Point3 &dir) {
  const std::size_t n = k.corners.size();
  std::vector<Point3> c;
  c.reserve(n + 2);
  for (std::size_t j = 0; j < n; ++j) {
    c.push_back(k.corners[j]);
    if (j == i) {
      c.push_back(k.corners[i] + dir);
      c.push_back(k.corners[(i + 1) % n] + dir);
    }
  }
  std::vector<Point3> walk = walk_from_corners(c);
  cancel_backtracks(walk);
  if (walk.size() < 4 || first_repeat(walk)) return std::nullopt;
  return from_unit_points(walk);
}

bool in_levels(const std::vector<std::int64_t> &levels, std::int64_t v) {
  return std::find(levels.begin(), levels.end(), v) != levels.end();
}

struct FoldGeometry {
  int axis;            // folded coordinate
  std::int64_t at;     // fold line coordinate
  std::int64_t pivot;  // z of the fold line
  std::int64_t side;   // +1 rotates coordinates above `at`, -1 below
};

/// Rotation about the fold line, bridging and overlap removal.
std::vector<Point3> rotate_half(const LatticeKnot &k, const FoldGeometry &geo, bool allow_bridges, FoldReport &r,
                                std::unordered_set<Point3, Point3Hash> &bridge_points) {
  const std::vector<Point3> pts = unit_points(k);
  const std::size_t n = pts.size();
  std::vector<bool> moved(n);
  std::vector<Point3> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = pts[i][geo.axis];
    moved[i] = geo.side > 0 ? v > geo.at : v < geo.at;
    img[i] = pts[i];
    if (moved[i]) {
      img[i][geo.axis] = 2 * geo.at - v;
      img[i].z = 2 * geo.pivot - pts[i].z;
    }
  }

  std::vector<Point3> walk;
  walk.reserve(n + 16);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    walk.push_back(img[i]);
    if (adjacent(img[i], img[j])) continue;
    if (!allow_bridges || moved[i] == moved[j])
      throw KnotError(ErrorCode::FoldCollision,
                      "edge " + point_str(pts[i]) + " -> " + point_str(pts[j]) + " is torn by the fold");
    // u stays on the fold line, w is its rotated neighbour.
    const Point3 u = moved[i] ? pts[j] : pts[i];
    const std::int64_t z_to = 2 * geo.pivot - u.z;
    const Point3 out = unit(geo.axis, geo.side);
    std::vector<Point3> bridge;
    bridge.push_back(u + out);
    const std::int64_t dz = z_to > u.z ? 1 : -1;
    for (Point3 p = u + out; p.z != z_to;) {
      p.z += dz;
      bridge.push_back(p);
    }
    Point3 back = u;
    back.z = z_to;
    bridge.push_back(back);
    if (moved[i]) std::reverse(bridge.begin(), bridge.end());
    for (const Point3 &p : bridge) {
      walk.push_back(p);
      bridge_points.insert(p);
    }
    r.broken_sticks_reconnected += 1;
    r.added[geo.axis] += 2;
    r.added[kZ] += std::abs(z_to - u.z);
    if (geo.axis == kY) r.added_y_edges += 2;
    r.added_z_edges += std::abs(z_to - u.z);
  }

  const auto removed = cancel_backtracks(walk);
  for (int a = 0; a < 3; ++a) {
    r.removed[a] += removed[a];
    r.removed_overlap_edges += removed[a];
  }
  if (walk.size() < 4) throw KnotError(ErrorCode::FoldCollision, "fold collapsed the curve");
  if (auto p = first_repeat(walk)) {
    if (bridge_points.count(*p))
      throw KnotError(ErrorCode::ReconnectFailure, "bridge meets the curve at " + point_str(*p));
    throw KnotError(ErrorCode::FoldCollision, "folded curve revisits " + point_str(*p));
  }
  return walk;
}

void require_z_range(const LatticeKnot &k, std::int64_t lo, std::int64_t hi, const char *what) {
  for (const Point3 &p : k.corners)
    if (p.z < lo || p.z > hi)
      throw KnotError(ErrorCode::FoldCollision, std::string(what) + ": corner " + point_str(p) +
                                                    " lies outside z-levels " + std::to_string(lo) + ".." +
                                                    std::to_string(hi));
}

bool better(const FoldResult &a, const FoldResult &b) {
  const auto ta = a.report.post.total_edges(), tb = b.report.post.total_edges();
  if (ta != tb) return ta < tb;
  return a.knot.corners < b.knot.corners;
}

template <class Fn> FoldResult best_of_sides(Fn &&fold) {
  std::optional<FoldResult> best;
  std::optional<KnotError> first_error;
  for (FoldSide side : {FoldSide::Positive, FoldSide::Negative}) {
    try {
      FoldResult r = fold(side);
      if (!best || better(r, *best)) best = std::move(r);
    } catch (const KnotError &e) {
      if (!first_error) first_error = e;
    }
  }
  if (!best) throw *first_error;
  return *best;
}

FoldResult fold_horizontal_side(const LatticeKnot &k, int g, FoldSide side) {
  require_z_range(k, 1, 2, "horizontal fold expects a settled knot");
  FoldResult res;
  FoldReport &r = res.report;
  r.side = side;
  r.fold_at = fold_line(g, side);
  r.pre = edge_census(k);
  const FoldGeometry geo{kX, r.fold_at, 1, side == FoldSide::Positive ? 1 : -1};

  std::unordered_set<Point3, Point3Hash> bridge_points;
  LatticeKnot folded = from_unit_points(rotate_half(k, geo, false, r, bridge_points));

  // y-sticks on the fold level, and on the outer level for even g, can drop
  // from z-level 2 to z-level 1: nothing else meets those x-levels on z = 1.
  std::vector<std::int64_t> levels{r.fold_at};
  if (g % 2 == 0) levels.push_back(side == FoldSide::Positive ? 1 : g);
  for (bool again = true; again;) {
    again = false;
    const std::vector<Stick> st = sticks(folded);
    const std::size_t n = st.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Stick &s = st[i], &prev = st[(i + n - 1) % n], &next = st[(i + 1) % n];
      if (s.axis != kY || s.from.z != 2 || !in_levels(levels, s.from.x)) continue;
      if (prev.axis != kZ || next.axis != kZ || prev.from.z > 2 || next.to.z > 2) continue;
      if (auto lowered = shift_stick(folded, i, unit(kZ, -1))) {
        add_delta(r, edge_census(folded), edge_census(*lowered));
        folded = std::move(*lowered);
        r.lowered_sticks += 1;
        again = true;
        break;
      }
    }
  }
  r.post = edge_census(folded);
  res.knot = std::move(folded);
  return res;
}

FoldResult fold_vertical_side(const LatticeKnot &k, int g, FoldSide side) {
  require_z_range(k, 0, 2, "vertical fold expects a horizontally folded knot");
  FoldResult res;
  FoldReport &r = res.report;
  r.side = side;
  r.fold_at = fold_line(g, side);
  r.pre = edge_census(k);
  const FoldGeometry geo{kY, r.fold_at, 2, side == FoldSide::Positive ? 1 : -1};
  auto is_moved = [&](std::int64_t y) { return geo.side > 0 ? y > geo.at : y < geo.at; };

  // y-sticks left on z-level 1 by the horizontal fold go back up to the fold
  // plane when the fold line would sever them.
  LatticeKnot work = k;
  for (bool again = true; again;) {
    again = false;
    const std::vector<Stick> st = sticks(work);
    for (std::size_t i = 0; i < st.size(); ++i) {
      const Stick &s = st[i];
      if (s.axis != kY || s.from.z != 1 || is_moved(s.from.y) == is_moved(s.to.y)) continue;
      if (auto lifted = shift_stick(work, i, unit(kZ, 1))) {
        add_delta(r, edge_census(work), edge_census(*lifted));
        work = std::move(*lifted);
        r.raised_sticks += 1;
        again = true;
        break;
      }
    }
  }

  std::unordered_set<Point3, Point3Hash> bridge_points;
  res.knot = from_unit_points(rotate_half(work, geo, true, r, bridge_points));
  r.post = edge_census(res.knot);
  return res;
}

} // namespace

std::string to_string(FoldSide side) {
  switch (side) {
  case FoldSide::Automatic: return "auto";
  case FoldSide::Positive: return "positive";
  case FoldSide::Negative: return "negative";
  }
  return "?";
}

std::int64_t fold_line(int g, FoldSide side) {
  const std::int64_t f = g % 2 ? (g + 1) / 2 : g / 2 + 1;
  return side == FoldSide::Negative ? g + 1 - f : f;
}

LatticeKnot settle(const GridDiagram &d) {
  const int g = d.size;
  std::vector<int> x_row(g + 1);
  for (int r = 1; r <= g; ++r) x_row[d.x_col[r - 1]] = r;
  std::vector<Point3> corners;
  corners.reserve(4 * g);
  int r = 1;
  do {
    const std::int64_t xc = d.x_col[r - 1], oc = d.o_col[r - 1];
    corners.push_back({xc, r, 2});
    corners.push_back({xc, r, 1});
    corners.push_back({oc, r, 1});
    corners.push_back({oc, r, 2});
    r = x_row[oc];
  } while (r != 1);
  return canonicalize(LatticeKnot{std::move(corners)});
}

FoldResult fold_horizontal(const LatticeKnot &k, int g, FoldSide side) {
  if (side != FoldSide::Automatic) return fold_horizontal_side(k, g, side);
  return best_of_sides([&](FoldSide s) { return fold_horizontal_side(k, g, s); });
}

FoldResult fold_vertical(const LatticeKnot &k, int g, FoldSide side) {
  if (side != FoldSide::Automatic) return fold_vertical_side(k, g, side);
  return best_of_sides([&](FoldSide s) { return fold_vertical_side(k, g, s); });
}

const LatticeKnot &PipelineResult::stage(int step) const {
  switch (step) {
  case 1: return settled;
  case 2: return horizontal.knot;
  default: return vertical.knot;
  }
}

PipelineResult run_pipeline(const GridDiagram &d, int steps) {
  if (steps < 1 || steps > 3) throw std::invalid_argument("steps must be 1, 2 or 3");
  PipelineResult out;
  out.steps = steps;
  out.settled = settle(d);
  if (out.steps == 1) return out;

  std::vector<FoldResult> horizontals;
  std::optional<KnotError> first_error;
  for (FoldSide side : {FoldSide::Positive, FoldSide::Negative}) {
    try {
      horizontals.push_back(fold_horizontal(out.settled, d.size, side));
    } catch (const KnotError &e) {
      if (!first_error) first_error = e;
    }
  }
  if (horizontals.empty()) throw *first_error;
  out.horizontal = *std::min_element(horizontals.begin(), horizontals.end(), better);
  if (out.steps == 2) return out;

  std::optional<FoldResult> best;
  for (const FoldResult &h : horizontals) {
    for (FoldSide side : {FoldSide::Positive, FoldSide::Negative}) {
      try {
        FoldResult v = fold_vertical(h.knot, d.size, side);
        if (!best || better(v, *best)) {
          best = std::move(v);
          out.vertical_parent_side = h.report.side;
        }
      } catch (const KnotError &e) {
        if (!first_error) first_error = e;
      }
    }
  }
  if (!best) throw *first_error;
  out.vertical = std::move(*best);
  return out;
}

} // namespace latknot

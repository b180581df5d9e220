#include "latknot/rope.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "latknot/errors.hpp"

namespace latknot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

using Vec = std::array<double, 3>;

Vec to_vec(const Point3 &p) { return {double(p.x), double(p.y), double(p.z)}; }
Vec operator+(const Vec &a, const Vec &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec operator-(const Vec &a, const Vec &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec operator*(double s, const Vec &a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec &a, const Vec &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 unit_direction(const Point3 &from, const Point3 &to) {
  const Point3 d = to - from;
  auto sgn = [](std::int64_t v) -> std::int64_t { return (v > 0) - (v < 0); };
  return {sgn(d.x), sgn(d.y), sgn(d.z)};
}

std::int64_t manhattan(const Point3 &a, const Point3 &b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

double piece_length(const Piece &p) {
  return p.kind == Piece::Kind::Arc ? kHalfPi : static_cast<double>(manhattan(p.p0, p.p1));
}

/// Position and first two derivatives at local arclength s.
struct Jet {
  Vec x, d1, d2;
};

struct Curve {
  Piece::Kind kind;
  Vec a, b, c; // segment: start, unit direction; arc: center, u, v
  double start = 0, length = 0;
  Vec lo, hi; // bounding box

  Jet at(double s) const {
    if (kind == Piece::Kind::Segment) return {a + s * b, b, {0, 0, 0}};
    const double cs = std::cos(s), sn = std::sin(s);
    return {a + cs * b + sn * c, (-sn) * b + cs * c, (-cs) * b + (-sn) * c};
  }
  bool curved() const { return kind == Piece::Kind::Arc; }
};

Curve make_curve(const Piece &p, double start) {
  Curve c;
  c.kind = p.kind;
  c.start = start;
  c.length = piece_length(p);
  std::vector<Vec> hull;
  if (p.kind == Piece::Kind::Segment) {
    c.a = to_vec(p.p0);
    const Point3 d = unit_direction(p.p0, p.p1);
    c.b = to_vec(d);
    hull = {to_vec(p.p0), to_vec(p.p1)};
  } else {
    c.a = to_vec(p.center);
    c.b = to_vec(p.u);
    c.c = to_vec(p.v);
    hull = {c.a + c.b, c.a + c.c, c.a + c.b + c.c};
  }
  c.lo = c.hi = hull.front();
  for (const Vec &h : hull)
    for (int i = 0; i < 3; ++i) {
      c.lo[i] = std::min(c.lo[i], h[i]);
      c.hi[i] = std::max(c.hi[i], h[i]);
    }
  return c;
}

double box_distance(const Curve &a, const Curve &b) {
  double sq = 0;
  for (int i = 0; i < 3; ++i) {
    const double gap = std::max({0.0, a.lo[i] - b.hi[i], b.lo[i] - a.hi[i]});
    sq += gap * gap;
  }
  return std::sqrt(sq);
}

struct P2 {
  double s, t;
};

/// Minimum of q(ds,dt) = f + gs*ds + gt*dt + (hss*ds^2 + 2*hst*ds*dt + htt*dt^2)/2 over a
/// convex polygon; returns the value and the minimizer.
struct Quadratic {
  double f, gs, gt, hss, hst, htt;
  double operator()(const P2 &p) const {
    return f + gs * p.s + gt * p.t + 0.5 * (hss * p.s * p.s + 2 * hst * p.s * p.t + htt * p.t * p.t);
  }
};

std::pair<double, P2> minimize(const Quadratic &q, const std::vector<P2> &poly) {
  double best = q(poly.front());
  P2 arg = poly.front();
  auto consider = [&](const P2 &p) {
    const double v = q(p);
    if (v < best) {
      best = v;
      arg = p;
    }
  };
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2 a = poly[i], b = poly[(i + 1) % n];
    consider(a);
    const P2 d{b.s - a.s, b.t - a.t};
    // Restriction to the edge: q(a + lambda d).
    const double slope = q.gs * d.s + q.gt * d.t + q.hss * a.s * d.s + q.hst * (a.s * d.t + a.t * d.s) + q.htt * a.t * d.t;
    const double curv = q.hss * d.s * d.s + 2 * q.hst * d.s * d.t + q.htt * d.t * d.t;
    if (curv > 0) {
      const double lambda = -slope / curv;
      if (lambda > 0 && lambda < 1) consider({a.s + lambda * d.s, a.t + lambda * d.t});
    }
  }
  double area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const P2 a = poly[i], b = poly[(i + 1) % n];
    area += a.s * b.t - a.t * b.s;
  }
  const double det = q.hss * q.htt - q.hst * q.hst;
  if (n >= 3 && area != 0 && q.hss > 0 && det > 0) {
    const P2 c{(-q.htt * q.gs + q.hst * q.gt) / det, (q.hst * q.gs - q.hss * q.gt) / det};
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      const P2 a = poly[i], b = poly[(i + 1) % n];
      const double cr = (b.s - a.s) * (c.t - a.t) - (b.t - a.t) * (c.s - a.s);
      if (cr * area < 0) inside = false;
    }
    if (inside) consider(c);
  }
  return {best, arg};
}

/// Clips a convex polygon to {p : k_s*s + k_t*t + k0 >= 0}.
std::vector<P2> clip(const std::vector<P2> &poly, double ks, double kt, double k0) {
  std::vector<P2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2 a = poly[i], b = poly[(i + 1) % n];
    const double fa = ks * a.s + kt * a.t + k0, fb = ks * b.s + kt * b.t + k0;
    if (fa >= 0) out.push_back(a);
    if ((fa >= 0) != (fb >= 0)) {
      const double r = fa / (fa - fb);
      out.push_back({a.s + r * (b.s - a.s), a.t + r * (b.t - a.t)});
    }
  }
  return out;
}

struct Box {
  double s0, s1, t0, t1;
};

struct Scan {
  double best; // smallest realized distance so far, starts at the cap
  int piece_a = -1, piece_b = -1;
};

void scan_pair(const Curve &A, const Curve &B, int ia, int ib, double total, double tol, Scan &scan) {
  std::vector<Box> stack{{0, A.length, 0, B.length}};
  const double offset = B.start - A.start;
  while (!stack.empty()) {
    const Box box = stack.back();
    stack.pop_back();
    const double a = (box.s1 - box.s0) / 2, b = (box.t1 - box.t0) / 2;
    const double sc = box.s0 + a, tc = box.t0 + b;
    // Local coordinates around the center; separation t - s + offset in [pi, total - pi].
    std::vector<P2> poly{{-a, -b}, {a, -b}, {a, b}, {-a, b}};
    const double sep = tc - sc + offset;
    poly = clip(poly, -1, 1, sep - kPi);
    if (poly.empty()) continue;
    poly = clip(poly, 1, -1, total - kPi - sep);
    if (poly.empty()) continue;

    const Jet p = A.at(sc), q = B.at(tc);
    const Vec w = p.x - q.x;
    const double dist = std::sqrt(dot(w, w));
    const Quadratic model{dot(w, w),
                          2 * dot(w, p.d1),
                          -2 * dot(w, q.d1),
                          2 * (1 + dot(w, p.d2)),
                          -2 * dot(p.d1, q.d1),
                          2 * (1 - dot(w, q.d2))};
    const double dmax = dist + a + b;
    const double ka = A.curved() ? 1 : 0, kb = B.curved() ? 1 : 0;
    const double remainder =
        (2 * dmax * ka * a * a * a + 6 * ka * a * a * b + 6 * kb * a * b * b + 2 * dmax * kb * b * b * b) / 6;
    const auto [qmin, arg] = minimize(model, poly);

    // Realized distance at the model's minimizer tightens the running best.
    const Jet pa = A.at(sc + arg.s), qa = B.at(tc + arg.t);
    const double realized = std::sqrt(dot(pa.x - qa.x, pa.x - qa.x));
    if (realized < scan.best) {
      scan.best = realized;
      scan.piece_a = ia;
      scan.piece_b = ib;
    }
    const double lower = std::sqrt(std::max(0.0, qmin - remainder));
    if (lower >= scan.best - tol) continue;
    if (a < 1e-9 && b < 1e-9) continue; // below floating resolution of the model
    if (a >= b) {
      stack.push_back({box.s0, sc, box.t0, box.t1});
      stack.push_back({sc, box.s1, box.t0, box.t1});
    } else {
      stack.push_back({box.s0, box.s1, box.t0, tc});
      stack.push_back({box.s0, box.s1, tc, box.t1});
    }
  }
}

void write_point(std::ostream &out, const Point3 &p) { out << p.x << ' ' << p.y << ' ' << p.z; }

Point3 read_point(std::istringstream &in) {
  Point3 p;
  if (!(in >> p.x >> p.y >> p.z)) throw KnotError(ErrorCode::MalformedInput, "expected three integer coordinates");
  return p;
}

} // namespace

Point3 piece_start(const Piece &p) { return p.kind == Piece::Kind::Segment ? p.p0 : p.center + p.u; }
Point3 piece_end(const Piece &p) { return p.kind == Piece::Kind::Segment ? p.p1 : p.center + p.v; }

Point3 piece_start_tangent(const Piece &p) {
  return p.kind == Piece::Kind::Segment ? unit_direction(p.p0, p.p1) : p.v;
}

Point3 piece_end_tangent(const Piece &p) {
  return p.kind == Piece::Kind::Segment ? unit_direction(p.p0, p.p1) : Point3{} - p.u;
}

SmoothKnot smooth(const LatticeKnot &k) {
  const std::size_t n = k.corners.size();
  if (n < 4) throw KnotError(ErrorCode::DegenerateKnot, "a closed lattice knot needs at least four corners");
  std::vector<Point3> dir(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 &a = k.corners[i], &b = k.corners[(i + 1) % n];
    if (a == b) throw KnotError(ErrorCode::DegenerateKnot, "stick " + std::to_string(i) + " has length 0");
    if (stick_axis(a, b) < 0)
      throw KnotError(ErrorCode::DegenerateKnot, "stick " + std::to_string(i) + " is not axis-parallel");
    dir[i] = unit_direction(a, b);
  }
  SmoothKnot s;
  s.pieces.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 &din = dir[i], &dout = dir[(i + 1) % n];
    if (stick_axis(Point3{}, din) == stick_axis(Point3{}, dout))
      throw KnotError(ErrorCode::DegenerateKnot, "corner " + std::to_string((i + 1) % n) + " is not a right angle");
    const Point3 from = k.corners[i] * 2, to = k.corners[(i + 1) % n] * 2;
    Piece seg;
    seg.kind = Piece::Kind::Segment;
    seg.p0 = from + din;
    seg.p1 = to - din;
    s.pieces.push_back(seg);
    Piece arc;
    arc.kind = Piece::Kind::Arc;
    arc.center = to - din + dout;
    arc.u = Point3{} - dout;
    arc.v = din;
    s.pieces.push_back(arc);
  }
  return s;
}

RopeMetrics rope_metrics(const SmoothKnot &s, double tolerance) {
  RopeMetrics m;
  std::vector<Curve> curves;
  std::vector<int> index;
  double start = 0;
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    const Piece &p = s.pieces[i];
    if (p.kind == Piece::Kind::Arc) {
      ++m.arc_count;
    } else {
      m.straight_length += manhattan(p.p0, p.p1);
    }
    const Curve c = make_curve(p, start);
    start += c.length;
    if (c.length > 0) {
      curves.push_back(c);
      index.push_back(static_cast<int>(i));
    }
  }
  m.corner_count = m.arc_count;
  m.length = static_cast<double>(m.straight_length) + kHalfPi * static_cast<double>(m.arc_count);
  m.min_curvature_radius = 1;

  const double total = m.length;
  Scan scan{2.0};
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const Curve &A = curves[i], &B = curves[j];
      // Arclength separations available to this pair.
      const double lo = B.start - (A.start + A.length), hi = B.start + B.length - A.start;
      if (hi < kPi || lo > total - kPi) continue;
      if (box_distance(A, B) >= scan.best) continue;
      scan_pair(A, B, index[i], index[j], total, tolerance, scan);
    }
  m.min_doubled_self_distance = scan.best;
  m.self_distance_lower = std::max(0.0, scan.best - tolerance);
  m.closest_piece_a = scan.piece_a;
  m.closest_piece_b = scan.piece_b;
  m.thickness_radius = std::min(m.min_curvature_radius, m.min_doubled_self_distance / 2);
  m.ropelength = m.length / m.thickness_radius;
  return m;
}

std::string export_geometry(const SmoothKnot &s, ExportFormat format, int density) {
  std::ostringstream out;
  if (format == ExportFormat::ArcExact) {
    out << "# smooth knot, doubled lattice units, arcs of radius 1\n";
    for (const Piece &p : s.pieces) {
      if (p.kind == Piece::Kind::Segment) {
        out << "SEG ";
        write_point(out, p.p0);
        out << ' ';
        write_point(out, p.p1);
      } else {
        out << "ARC ";
        write_point(out, p.center);
        out << ' ';
        write_point(out, p.u);
        out << ' ';
        write_point(out, p.v);
      }
      out << '\n';
    }
    return out.str();
  }
  if (density < 8) throw KnotError(ErrorCode::BadDensity, "polyline density must be at least 8 points per arc");
  out << std::setprecision(17);
  for (const Piece &p : s.pieces) {
    if (p.kind == Piece::Kind::Segment) {
      // A zero-length segment coincides with the next arc's first sample.
      if (p.p0 != p.p1) {
        write_point(out, p.p0);
        out << '\n';
      }
      continue;
    }
    const Vec c = to_vec(p.center), u = to_vec(p.u), v = to_vec(p.v);
    for (int k = 0; k < density; ++k) {
      const double a = kHalfPi * k / density;
      const Vec x = c + std::cos(a) * u + std::sin(a) * v;
      out << x[0] << ' ' << x[1] << ' ' << x[2] << '\n';
    }
  }
  return out.str();
}

std::vector<std::array<double, 3>> import_polyline(std::string_view text) {
  std::vector<std::array<double, 3>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::array<double, 3> v{};
    if (!(row >> v[0] >> v[1] >> v[2])) throw KnotError(ErrorCode::MalformedInput, "bad polyline vertex: " + line);
    out.push_back(v);
  }
  return out;
}

SmoothKnot import_arc_exact(std::string_view text) {
  SmoothKnot s;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    Piece p;
    if (tag == "SEG") {
      p.kind = Piece::Kind::Segment;
      p.p0 = read_point(row);
      p.p1 = read_point(row);
    } else if (tag == "ARC") {
      p.kind = Piece::Kind::Arc;
      p.center = read_point(row);
      p.u = read_point(row);
      p.v = read_point(row);
    } else {
      throw KnotError(ErrorCode::MalformedInput, "unknown record: " + tag);
    }
    s.pieces.push_back(p);
  }
  return s;
}

} // namespace latknot

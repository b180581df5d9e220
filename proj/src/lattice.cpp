#include "latknot/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace latknot {

namespace {

std::string point_str(const Point3 &p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

Point3 unit_step(const Point3 &from, const Point3 &to, int axis) {
  Point3 step;
  step[axis] = to[axis] > from[axis] ? 1 : -1;
  return step;
}

} // namespace

int stick_axis(const Point3 &a, const Point3 &b) {
  int axis = -1;
  for (int i = 0; i < 3; ++i) {
    if (a[i] == b[i]) continue;
    if (axis >= 0) return -1;
    axis = i;
  }
  return axis;
}

std::vector<Stick> sticks(const LatticeKnot &k) {
  std::vector<Stick> out;
  const std::size_t n = k.corners.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 &a = k.corners[i], &b = k.corners[(i + 1) % n];
    const int axis = stick_axis(a, b);
    const std::int64_t len = axis < 0 ? 0 : (b[axis] > a[axis] ? b[axis] - a[axis] : a[axis] - b[axis]);
    out.push_back({a, b, axis, len});
  }
  return out;
}

std::vector<Point3> unit_points(const LatticeKnot &k) {
  std::vector<Point3> pts;
  for (const Stick &s : sticks(k)) {
    if (s.axis < 0) throw KnotError(ErrorCode::MalformedInput, "stick is not axis-parallel at " + point_str(s.from));
    const Point3 step = unit_step(s.from, s.to, s.axis);
    for (Point3 p = s.from; p != s.to; p = p + step) pts.push_back(p);
  }
  return pts;
}

LatticeKnot canonicalize(const LatticeKnot &k) {
  std::vector<Point3> c;
  c.reserve(k.corners.size());
  for (const Point3 &p : k.corners)
    if (c.empty() || c.back() != p) c.push_back(p);
  while (c.size() > 1 && c.front() == c.back()) c.pop_back();

  for (std::size_t i = 0; i < c.size(); ++i)
    if (stick_axis(c[i], c[(i + 1) % c.size()]) < 0 && c.size() > 1)
      throw KnotError(ErrorCode::MalformedInput, "corners " + point_str(c[i]) + " and " +
                                                     point_str(c[(i + 1) % c.size()]) + " are not axis-aligned");

  // Drop corners that lie strictly inside the segment joining their neighbours.
  bool changed = true;
  while (changed && c.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < c.size() && c.size() >= 3; ++i) {
      const Point3 &prev = c[(i + c.size() - 1) % c.size()], &cur = c[i], &next = c[(i + 1) % c.size()];
      const int a1 = stick_axis(prev, cur), a2 = stick_axis(cur, next);
      if (a1 >= 0 && a1 == a2 && (cur[a1] - prev[a1] > 0) == (next[a1] - cur[a1] > 0)) {
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (c.size() < 4) throw KnotError(ErrorCode::DegenerateCurve, std::to_string(c.size()) + " corners remain");
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return LatticeKnot{std::move(c)};
}

LatticeKnot from_unit_points(const std::vector<Point3> &points) { return canonicalize(LatticeKnot{points}); }

LatticeReport validate_lattice(const LatticeKnot &k) {
  LatticeReport report;
  const std::size_t n = k.corners.size();
  if (n < 4) report.push_back({LatticeViolation::TooFewCorners, std::to_string(n) + " corners"});
  if (n < 2) return report;

  bool axis_ok = true;
  const std::vector<Stick> st = sticks(k);
  for (std::size_t i = 0; i < n; ++i) {
    const Stick &s = st[i];
    if (s.axis >= 0) continue;
    axis_ok = false;
    if (s.from == s.to)
      report.push_back({LatticeViolation::ZeroLengthStick, "repeated corner " + point_str(s.from)});
    else if (i + 1 == n)
      report.push_back({LatticeViolation::NotClosed, "last corner " + point_str(s.from) +
                                                         " does not reach the first " + point_str(s.to)});
    else
      report.push_back({LatticeViolation::NotAxisParallel, point_str(s.from) + " -> " + point_str(s.to)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Stick &a = st[(i + n - 1) % n], &b = st[i];
    if (a.axis >= 0 && a.axis == b.axis)
      report.push_back({LatticeViolation::ColinearCorner, "corner " + point_str(b.from) + " joins parallel sticks"});
  }
  if (!axis_ok) return report;

  std::unordered_set<Point3, Point3Hash> seen;
  for (const Point3 &p : unit_points(k)) {
    if (!seen.insert(p).second) {
      report.push_back({LatticeViolation::SelfIntersection, "lattice point " + point_str(p) + " visited twice"});
      break;
    }
  }
  return report;
}

bool has_violation(const LatticeReport &report, LatticeViolation kind) {
  return std::any_of(report.begin(), report.end(), [&](const LatticeIssue &i) { return i.kind == kind; });
}

std::string serialize_lattice(const LatticeKnot &k, const LatticeHeader &header) {
  std::ostringstream out;
  out << "# lattice knot\n";
  for (const auto &[key, value] : header.fields) out << "# " << key << ": " << value << '\n';
  for (const Point3 &p : k.corners) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
  return out.str();
}

LatticeKnot parse_lattice(std::string_view text, LatticeHeader *header) {
  LatticeKnot k;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto colon = line.find(':', first);
      if (header && colon != std::string::npos) {
        auto clean = [](std::string s) {
          const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
          return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        header->fields[clean(line.substr(first + 1, colon - first - 1))] = clean(line.substr(colon + 1));
      }
      continue;
    }
    std::istringstream row(line);
    Point3 p;
    std::string extra;
    if (!(row >> p.x >> p.y >> p.z) || (row >> extra))
      throw KnotError(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": expected 'x y z'");
    k.corners.push_back(p);
  }
  return k;
}

std::string lattice_to_json_array(const LatticeKnot &k) {
  std::string out = "[";
  for (std::size_t i = 0; i < k.corners.size(); ++i) {
    const Point3 &p = k.corners[i];
    if (i) out += ',';
    out += "[" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + "]";
  }
  return out + "]";
}

LatticeKnot lattice_from_json_array(std::string_view text) {
  std::vector<std::int64_t> nums;
  std::string tok;
  int depth = 0;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      std::size_t used = 0;
      nums.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception &) {
      throw KnotError(ErrorCode::MalformedInput, "bad number '" + tok + "'");
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == '[') ++depth;
    else if (ch == ']') { flush(); --depth; }
    else if (ch == ',') flush();
    else if (std::isspace(static_cast<unsigned char>(ch))) continue;
    else tok.push_back(ch);
    if (depth < 0 || depth > 2) throw KnotError(ErrorCode::MalformedInput, "unbalanced brackets");
  }
  if (depth != 0 || nums.size() % 3 != 0) throw KnotError(ErrorCode::MalformedInput, "expected triples");
  LatticeKnot k;
  for (std::size_t i = 0; i < nums.size(); i += 3) k.corners.push_back({nums[i], nums[i + 1], nums[i + 2]});
  return k;
}

} // namespace latknot

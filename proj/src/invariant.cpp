#include "latknot/invariant.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>

namespace latknot {

namespace {

using i128 = __int128;

// Dense polynomial over Z with ascending coefficients and no trailing zeros.
using Poly = std::vector<mpz_class>;

void trim(Poly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly &b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Quotient of an exact division; the remainder must vanish.
Poly exact_div(Poly num, const Poly &den) {
  if (den.empty()) throw std::logic_error("division by zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
  Poly q(num.size() - den.size() + 1, 0);
  const mpz_class &lead = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class &top = num[k + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw std::logic_error("inexact polynomial division");
    mpz_class c = top / lead;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    q[k] = c;
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

Poly bareiss(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpz_class(1)};
  Poly prev{mpz_class(1)};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].empty()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (negate)
    for (auto &c : det) c = -c;
  return det;
}

// ---- projection ---------------------------------------------------------

struct P2 {
  i128 x, y;
};

i128 cross(const P2 &a, const P2 &b) { return a.x * b.y - a.y * b.x; }
P2 minus(const P2 &a, const P2 &b) { return {a.x - b.x, a.y - b.y}; }
int sgn(i128 v) { return (v > 0) - (v < 0); }

struct Rational {
  i128 num, den; // den > 0
  bool operator<(const Rational &o) const { return num * o.den < o.num * den; }
  bool operator==(const Rational &o) const { return num * o.den == o.num * den; }
};

Rational make_rational(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

struct CrossingHit {
  int crossing;
  Rational param;
  bool over;
};

std::optional<PlanarDiagram> try_projection(const LatticeKnot &k, int a, int b, std::int64_t scale) {
  const std::size_t n = k.corners.size();
  std::vector<P2> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 &p = k.corners[i];
    q[i] = {static_cast<i128>(scale) * p.x + static_cast<i128>(a) * p.z,
            static_cast<i128>(scale) * p.y + static_cast<i128>(b) * p.z};
  }
  std::vector<std::vector<CrossingHit>> hits(n);
  std::vector<int> signs;

  for (std::size_t i = 0; i < n; ++i) {
    const P2 p0 = q[i], p1 = q[(i + 1) % n], r = minus(p1, p0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const P2 q0 = q[j], q1 = q[(j + 1) % n], s = minus(q1, q0);
      const int o1 = sgn(cross(r, minus(q0, p0))), o2 = sgn(cross(r, minus(q1, p0)));
      const int o3 = sgn(cross(s, minus(p0, q0))), o4 = sgn(cross(s, minus(p1, q0)));
      if (adjacent) {
        // Adjacent sticks must meet only at their shared corner.
        if (o1 == 0 && o2 == 0) return std::nullopt;
        continue;
      }
      const bool proper = o1 * o2 < 0 && o3 * o4 < 0;
      if (!proper) {
        // Any touching (endpoint on a segment, colinear overlap) is irregular.
        auto on_segment = [](const P2 &u0, const P2 &u1, const P2 &w) {
          return std::min(u0.x, u1.x) <= w.x && w.x <= std::max(u0.x, u1.x) && std::min(u0.y, u1.y) <= w.y &&
                 w.y <= std::max(u0.y, u1.y);
        };
        if ((o1 == 0 && on_segment(p0, p1, q0)) || (o2 == 0 && on_segment(p0, p1, q1)) ||
            (o3 == 0 && on_segment(q0, q1, p0)) || (o4 == 0 && on_segment(q0, q1, p1)))
          return std::nullopt;
        continue;
      }
      const i128 denom = cross(r, s);
      const Rational t = make_rational(cross(minus(q0, p0), s), denom);
      const Rational u = make_rational(cross(minus(q0, p0), r), denom);
      // Heights along each stick at the crossing.
      const Point3 &a0 = k.corners[i], &a1 = k.corners[(i + 1) % n];
      const Point3 &b0 = k.corners[j], &b1 = k.corners[(j + 1) % n];
      const i128 za = a0.z * t.den + (a1.z - a0.z) * t.num; // / t.den
      const i128 zb = b0.z * u.den + (b1.z - b0.z) * u.num; // / u.den
      const i128 lhs = za * u.den, rhs = zb * t.den;
      if (lhs == rhs) return std::nullopt;
      const bool i_over = lhs > rhs;
      const int id = static_cast<int>(signs.size());
      const P2 over_dir = i_over ? r : s, under_dir = i_over ? s : r;
      signs.push_back(sgn(cross(over_dir, under_dir)));
      hits[i].push_back({id, t, i_over});
      hits[j].push_back({id, u, !i_over});
    }
  }

  PlanarDiagram pd;
  pd.signs = std::move(signs);
  for (auto &h : hits) {
    std::sort(h.begin(), h.end(), [](const CrossingHit &x, const CrossingHit &y) { return x.param < y.param; });
    for (std::size_t m = 1; m < h.size(); ++m)
      if (h[m].param == h[m - 1].param) return std::nullopt; // triple point
    for (const CrossingHit &c : h) pd.passes.push_back({c.crossing, c.over});
  }
  // Relabel crossings by first appearance along the traversal.
  std::vector<int> relabel(pd.signs.size(), -1);
  std::vector<int> signs_sorted;
  for (auto &p : pd.passes) {
    if (relabel[p.crossing] < 0) {
      relabel[p.crossing] = static_cast<int>(signs_sorted.size());
      signs_sorted.push_back(pd.signs[p.crossing]);
    }
    p.crossing = relabel[p.crossing];
  }
  pd.signs = std::move(signs_sorted);
  return pd;
}

} // namespace

ProjectionDiagram project(const LatticeKnot &k) {
  if (k.corners.size() < 4) throw KnotError(ErrorCode::DegenerateCurve, "cannot project fewer than four corners");
  std::int64_t zmin = std::numeric_limits<std::int64_t>::max(), zmax = std::numeric_limits<std::int64_t>::min();
  for (const Point3 &p : k.corners) {
    zmin = std::min(zmin, p.z);
    zmax = std::max(zmax, p.z);
  }
  static constexpr std::array<std::array<int, 2>, 6> kShears{{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};
  for (const auto &[a, b] : kShears) {
    // Keeps every slanted z-stick inside its own lattice cell.
    const std::int64_t scale = std::max(a, b) * (zmax - zmin + 1) + 1;
    if (auto pd = try_projection(k, a, b, scale)) return {std::move(*pd), a, b, scale};
  }
  throw KnotError(ErrorCode::NoRegularShear, "no candidate shear gives a regular projection");
}

LaurentPoly bareiss_determinant(const std::vector<std::vector<LaurentPoly>> &matrix) {
  const std::size_t n = matrix.size();
  // Multiply each row by t^-min so entries become ordinary polynomials.
  int total_shift = 0;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("matrix is not square");
    int lo = std::numeric_limits<int>::max();
    for (const auto &e : matrix[i])
      if (!e.is_zero()) lo = std::min(lo, e.min_exponent());
    if (lo == std::numeric_limits<int>::max()) return LaurentPoly();
    total_shift += lo;
    for (std::size_t j = 0; j < n; ++j) {
      const auto &e = matrix[i][j];
      if (e.is_zero()) continue;
      Poly p(e.max_exponent() - lo + 1, 0);
      for (const auto &[exp, c] : e.coeffs()) p[exp - lo] = mpz_class(static_cast<long>(c));
      m[i][j] = std::move(p);
    }
  }
  const Poly det = bareiss(std::move(m));
  std::map<int, std::int64_t> out;
  for (std::size_t e = 0; e < det.size(); ++e) {
    if (det[e] == 0) continue;
    if (!det[e].fits_slong_p()) throw std::overflow_error("determinant coefficient exceeds 64 bits");
    out[static_cast<int>(e) + total_shift] = det[e].get_si();
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly alexander(const PlanarDiagram &pd) {
  if (pd.components != 1) throw KnotError(ErrorCode::MultiComponent, "Alexander polynomial needs a knot diagram");
  const int n = pd.crossing_count();
  if (n == 0) return LaurentPoly(1);

  // Arc a runs from the (a-1)-th under-pass to the a-th one (cyclically).
  const int m = static_cast<int>(pd.passes.size());
  std::vector<int> over_arc(n, -1), under_in(n, -1), under_out(n, -1);
  int unders = 0;
  for (int i = 0; i < m; ++i)
    if (!pd.passes[i].over) ++unders;
  if (unders != n || m != 2 * n) throw KnotError(ErrorCode::MalformedInput, "inconsistent Gauss code");
  int arc = 0;
  for (int i = 0; i < m; ++i) {
    const auto &p = pd.passes[i];
    if (p.over) {
      over_arc[p.crossing] = arc;
    } else {
      under_in[p.crossing] = arc;
      arc = (arc + 1) % n;
      under_out[p.crossing] = arc;
    }
  }

  const LaurentPoly one(1), t = LaurentPoly::monomial(1, 1);
  std::vector<std::vector<LaurentPoly>> fox(n, std::vector<LaurentPoly>(n));
  for (int c = 0; c < n; ++c) {
    fox[c][over_arc[c]] = fox[c][over_arc[c]] + (one - t);
    if (pd.signs[c] > 0) {
      fox[c][under_in[c]] = fox[c][under_in[c]] + t;
      fox[c][under_out[c]] = fox[c][under_out[c]] - one;
    } else {
      fox[c][under_in[c]] = fox[c][under_in[c]] - one;
      fox[c][under_out[c]] = fox[c][under_out[c]] + t;
    }
  }
  // Any first minor of the Fox matrix gives the polynomial up to +-t^k.
  std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = fox[i][j];
  return bareiss_determinant(minor).normalized();
}

Consistency same_knot_certificate(const LaurentPoly &a, const LaurentPoly &b) {
  return a.normalized() == b.normalized() ? Consistency::Consistent : Consistency::Inconsistent;
}

} // namespace latknot

#include "latknot/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "latknot/errors.hpp"

namespace latknot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Interval of_rational(const Rational &q) {
  const double d = static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
  return {down(down(d)), up(up(d))};
}

Interval add(const Interval &a, const Interval &b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval mul(const Interval &a, const Interval &b) {
  const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval pi_interval() {
  // The double nearest pi lies above it.
  constexpr double pi = std::numbers::pi;
  return {down(pi), pi};
}

Interval sqrt_interval(std::int64_t m) {
  const double s = std::sqrt(static_cast<double>(m));
  return {down(s), up(s)};
}

std::optional<std::int64_t> exact_sqrt(std::int64_t m) {
  if (m < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
  for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
    if (c * c == m) return c;
  return std::nullopt;
}

std::string rational_text(const Rational &q) {
  std::ostringstream out;
  out << q.numerator();
  if (q.denominator() != 1) out << '/' << q.denominator();
  return out.str();
}

ExactReal make_real(Rational rational, Rational pi = 0, Rational root = 0, std::int64_t radicand = 0) {
  ExactReal v{rational, pi, root, radicand};
  if (v.root_coeff.numerator() == 0) v.radicand = 0;
  if (v.radicand != 0)
    if (auto s = exact_sqrt(v.radicand)) {
      v.rational += v.root_coeff * *s;
      v.root_coeff = 0;
      v.radicand = 0;
    }
  return v;
}

Rational poly(std::int64_t c, Rational a2, Rational a1, Rational a0) { return a2 * c * c + a1 * c + a0; }

BoundValue make(FormulaId id, ParityCase parity, ExactReal value) { return {id, parity, value}; }

void require_size(int g) {
  if (g < 2) throw KnotError(ErrorCode::SizeTooSmall, "grid size must be at least 2");
}

void require_step(int step) {
  if (step < 1 || step > 3) throw std::invalid_argument("step must be 1, 2 or 3");
}

void require_crossings(int c) {
  if (c < 3) throw KnotError(ErrorCode::CrossingTooSmall, "crossing number must be at least 3");
}

TheoremBound with_min(BoundValue a, BoundValue b) {
  const Ordering o = compare(a.value, b.value);
  const bool take_b =
      o == Ordering::Greater || (o == Ordering::Unknown && b.value.approx() < a.value.approx());
  return {a, b, take_b ? b : a};
}

std::string text(std::int64_t v) { return std::to_string(v); }

} // namespace

Interval ExactReal::enclosure() const {
  Interval r = of_rational(rational);
  if (pi_coeff.numerator() != 0) r = add(r, mul(of_rational(pi_coeff), pi_interval()));
  if (root_coeff.numerator() != 0 && radicand != 0) r = add(r, mul(of_rational(root_coeff), sqrt_interval(radicand)));
  return r;
}

double ExactReal::approx() const {
  double v = boost::rational_cast<double>(rational) + boost::rational_cast<double>(pi_coeff) * std::numbers::pi;
  if (radicand != 0) v += boost::rational_cast<double>(root_coeff) * std::sqrt(static_cast<double>(radicand));
  return v;
}

std::string ExactReal::to_string() const {
  std::string out;
  auto term = [&](const Rational &coef, const std::string &symbol) {
    if (coef.numerator() == 0) return;
    const Rational mag = coef.numerator() < 0 ? -coef : coef;
    std::string body = symbol.empty() ? rational_text(mag) : (mag == Rational(1) ? symbol : rational_text(mag) + "*" + symbol);
    if (out.empty())
      out = (coef.numerator() < 0 ? "-" : "") + body;
    else
      out += (coef.numerator() < 0 ? " - " : " + ") + body;
  };
  term(rational, "");
  term(pi_coeff, "pi");
  if (radicand != 0) term(root_coeff, "sqrt(" + std::to_string(radicand) + ")");
  return out.empty() ? "0" : out;
}

Ordering compare(const ExactReal &a, const ExactReal &b) {
  ExactReal d{a.rational - b.rational, a.pi_coeff - b.pi_coeff, 0, 0};
  Interval extra{0, 0};
  const bool ra = a.root_coeff.numerator() != 0 && a.radicand != 0, rb = b.root_coeff.numerator() != 0 && b.radicand != 0;
  if (ra && rb && a.radicand == b.radicand) {
    d = make_real(d.rational, d.pi_coeff, a.root_coeff - b.root_coeff, a.radicand);
  } else if (ra && rb) {
    extra = add(mul(of_rational(a.root_coeff), sqrt_interval(a.radicand)),
                mul(of_rational(-b.root_coeff), sqrt_interval(b.radicand)));
  } else if (ra) {
    d = make_real(d.rational, d.pi_coeff, a.root_coeff, a.radicand);
  } else if (rb) {
    d = make_real(d.rational, d.pi_coeff, -b.root_coeff, b.radicand);
  }
  if (d.is_rational() && extra.lo == 0 && extra.hi == 0) {
    if (d.rational.numerator() < 0) return Ordering::Less;
    if (d.rational.numerator() > 0) return Ordering::Greater;
    return Ordering::Equal;
  }
  const Interval e = add(d.enclosure(), extra);
  if (e.hi < 0) return Ordering::Less;
  if (e.lo > 0) return Ordering::Greater;
  return Ordering::Unknown;
}

bool certainly_le(const ExactReal &a, const ExactReal &b) {
  const Ordering o = compare(a, b);
  return o == Ordering::Less || o == Ordering::Equal;
}

std::string to_string(FormulaId id) {
  switch (id) {
  case FormulaId::step1: return "step1";
  case FormulaId::step2: return "step2";
  case FormulaId::step3: return "step3";
  case FormulaId::thm_len_general_a: return "thm_len_general_a";
  case FormulaId::thm_len_general_b: return "thm_len_general_b";
  case FormulaId::thm_len_nap_a: return "thm_len_nap_a";
  case FormulaId::thm_len_nap_b: return "thm_len_nap_b";
  case FormulaId::rop_step1: return "rop_step1";
  case FormulaId::rop_step2: return "rop_step2";
  case FormulaId::rop_step3: return "rop_step3";
  case FormulaId::thm_rop_general_a: return "thm_rop_general_a";
  case FormulaId::thm_rop_general_b: return "thm_rop_general_b";
  case FormulaId::thm_rop_nap_a: return "thm_rop_nap_a";
  case FormulaId::thm_rop_nap_b: return "thm_rop_nap_b";
  case FormulaId::thm_rop_decimal_a: return "thm_rop_decimal_a";
  case FormulaId::thm_rop_decimal_b: return "thm_rop_decimal_b";
  case FormulaId::diao_len: return "diao_len";
  case FormulaId::diao_rop: return "diao_rop";
  case FormulaId::cantarella_rop: return "cantarella_rop";
  case FormulaId::prior_len: return "prior_len";
  }
  return "unknown";
}

std::string to_string(ParityCase p) {
  switch (p) {
  case ParityCase::odd: return "odd";
  case ParityCase::four_k: return "4k";
  case ParityCase::four_k_plus_2: return "4k+2";
  case ParityCase::not_applicable: return "n/a";
  }
  return "n/a";
}

ParityCase parity_of(int g) {
  if (g % 2 != 0) return ParityCase::odd;
  return g % 4 == 0 ? ParityCase::four_k : ParityCase::four_k_plus_2;
}

BoundValue step_bound(int step, int g) {
  require_step(step);
  require_size(g);
  const ParityCase p = parity_of(g);
  switch (step) {
  case 1: {
    const Rational c0 = p == ParityCase::odd ? Rational(-1) : Rational(0);
    return make(FormulaId::step1, p, make_real(poly(g, 1, 2, c0)));
  }
  case 2: {
    const Rational c0 = p == ParityCase::odd ? Rational(-11, 4) : p == ParityCase::four_k ? Rational(-4) : Rational(-3);
    return make(FormulaId::step2, p, make_real(poly(g, Rational(3, 4), 2, c0)));
  }
  default: {
    const Rational c0 =
        p == ParityCase::odd ? Rational(-29, 8) : p == ParityCase::four_k ? Rational(-6) : Rational(-9, 2);
    return make(FormulaId::step3, p, make_real(poly(g, Rational(5, 8), 5, c0)));
  }
  }
}

std::int64_t step3_z_edge_bound(int g) {
  require_size(g);
  return g % 2 != 0 ? 4 * static_cast<std::int64_t>(g) - 2 : 4 * static_cast<std::int64_t>(g) - 4;
}

std::int64_t corner_floor(int step, int g) {
  require_step(step);
  require_size(g);
  return step == 1 ? 4 * g : step == 2 ? 2 * g : g;
}

BoundValue rop_step_bound(int step, int g) {
  require_step(step);
  require_size(g);
  const auto n = ParityCase::not_applicable;
  switch (step) {
  case 1: return make(FormulaId::rop_step1, n, make_real(poly(g, 2, -4, 0), 2 * g));
  case 2: return make(FormulaId::rop_step2, n, make_real(poly(g, Rational(3, 2), 0, Rational(-11, 2)), g));
  default:
    return make(FormulaId::rop_step3, n, make_real(poly(g, Rational(5, 4), 8, Rational(-29, 4)), Rational(g, 2)));
  }
}

TheoremBound theorem_len_bound(int c, bool nonalternating_prime) {
  require_crossings(c);
  const auto n = ParityCase::not_applicable;
  if (nonalternating_prime)
    return with_min(make(FormulaId::thm_len_nap_a, n, make_real(poly(c, Rational(3, 4), 2, Rational(-11, 4)))),
                    make(FormulaId::thm_len_nap_b, n, make_real(poly(c, Rational(5, 8), 5, Rational(-29, 8)))));
  return with_min(make(FormulaId::thm_len_general_a, n, make_real(poly(c, Rational(3, 4), 5, Rational(17, 4)))),
                  make(FormulaId::thm_len_general_b, n,
                       make_real(poly(c, Rational(5, 8), Rational(15, 2), Rational(71, 8)))));
}

TheoremBound theorem_rop_bound(int c, bool nonalternating_prime) {
  require_crossings(c);
  const auto n = ParityCase::not_applicable;
  if (nonalternating_prime)
    return with_min(
        make(FormulaId::thm_rop_nap_a, n, make_real(poly(c, Rational(3, 2), 0, Rational(-11, 2)), c)),
        make(FormulaId::thm_rop_nap_b, n, make_real(poly(c, Rational(5, 4), 8, Rational(-29, 4)), Rational(c, 2))));
  return with_min(
      make(FormulaId::thm_rop_general_a, n, make_real(poly(c, Rational(3, 2), 6, Rational(1, 2)), c + 2)),
      make(FormulaId::thm_rop_general_b, n,
           make_real(poly(c, Rational(5, 4), 13, Rational(55, 4)), Rational(c, 2) + 1)));
}

TheoremBound theorem_rop_decimal(int c) {
  require_crossings(c);
  const auto n = ParityCase::not_applicable;
  return with_min(
      make(FormulaId::thm_rop_decimal_a, n, make_real(poly(c, Rational(3, 2), Rational(915, 100), Rational(679, 100)))),
      make(FormulaId::thm_rop_decimal_b, n,
           make_real(poly(c, Rational(5, 4), Rational(1458, 100), Rational(1690, 100)))));
}

std::vector<BoundValue> comparator_bounds(int c) {
  require_crossings(c);
  const auto n = ParityCase::not_applicable;
  return {
      make(FormulaId::diao_len, n, make_real(poly(c, 0, 84, 11), 0, 136 * c + 22, c)),
      make(FormulaId::diao_rop, n, make_real(poly(c, 0, 168, 22), 0, 272 * c + 44, c)),
      make(FormulaId::cantarella_rop, n,
           make_real(poly(c, Rational(164, 100), Rational(769, 100), Rational(674, 100)))),
      make(FormulaId::prior_len, n, make_real(poly(c, Rational(3, 2), 2, Rational(1, 2)))),
  };
}

bool Certificate::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CertificateItem &i) { return i.pass; });
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  out << "certificate step=" << provenance.step << " g=" << provenance.g << " c=" << provenance.crossings
      << (provenance.nonalternating_prime ? " nap" : "") << " edges=" << census.total_edges()
      << " corners=" << census.corners << " verdict=" << (pass() ? "PASS" : "FAIL") << '\n';
  for (const auto &i : items)
    out << "  " << (i.pass ? "PASS " : "FAIL ") << i.check << ": " << i.lhs << ' ' << i.relation << ' ' << i.rhs
        << '\n';
  return out.str();
}

Certificate certify(const LatticeKnot &k, const Provenance &provenance) {
  Certificate cert;
  cert.provenance = provenance;
  auto push = [&](std::string check, std::string lhs, std::string rel, std::string rhs, bool pass) {
    cert.items.push_back({std::move(check), std::move(lhs), std::move(rel), std::move(rhs), pass});
  };

  const LatticeReport report = validate_lattice(k);
  push("valid lattice knot", report.empty() ? "no violations" : report.front().detail, "==", "no violations",
       report.empty());
  if (!report.empty()) return cert;
  cert.census = edge_census(k);
  const std::int64_t total = cert.census.total_edges();
  const ExactReal total_real = make_real(total);
  const int step = provenance.step, g = provenance.g, c = provenance.crossings;

  if (step >= 1 && step <= 3 && g >= 2) {
    const BoundValue b = step_bound(step, g);
    push(to_string(b.formula) + " edge bound (" + to_string(b.parity) + ")", text(total), "<=", b.value.to_string(),
         certainly_le(total_real, b.value));
    const std::int64_t floor = corner_floor(step, g);
    if (step == 1)
      push("step1 corners", text(cert.census.corners), "==", text(floor), cert.census.corners == floor);
    else
      push("step" + text(step) + " corners", text(cert.census.corners), ">=", text(floor),
           cert.census.corners >= floor);
    if (step == 3) {
      const std::int64_t zb = step3_z_edge_bound(g);
      push("step3 z-edges", text(cert.census.z_edges), "<=", text(zb), cert.census.z_edges <= zb);
    }
  }

  if (c >= 3) {
    const int max_g = provenance.nonalternating_prime ? c : c + 2;
    if (g >= 2) push("grid size from crossing number", text(g), "<=", text(max_g), g <= max_g);
    if (step == 2 || step == 3) {
      const TheoremBound t = theorem_len_bound(c, provenance.nonalternating_prime);
      const BoundValue &b = step == 2 ? t.form_a : t.form_b;
      push(to_string(b.formula), text(total), "<=", b.value.to_string(), certainly_le(total_real, b.value));
    }
  }

  if (provenance.known_min_len)
    push("known minimum length", text(total), ">=", text(*provenance.known_min_len), total >= *provenance.known_min_len);
  return cert;
}

void certify_rope(Certificate &cert, const RopeMetrics &m, double thickness_tolerance) {
  auto push = [&](std::string check, std::string lhs, std::string rel, std::string rhs, bool pass) {
    cert.items.push_back({std::move(check), std::move(lhs), std::move(rel), std::move(rhs), pass});
  };
  const EdgeCensus &e = cert.census;
  const Provenance &p = cert.provenance;
  const ExactReal length = make_real(m.straight_length, Rational(m.arc_count, 2));

  push("smooth length identity", length.to_string(), "==",
       make_real(2 * e.total_edges() - 2 * e.corners, Rational(e.corners, 2)).to_string(),
       m.straight_length == 2 * e.total_edges() - 2 * e.corners && m.arc_count == e.corners);
  push("curvature radius", std::to_string(m.min_curvature_radius), "==", "1", m.min_curvature_radius == 1.0);
  std::ostringstream th;
  th.precision(12);
  const double certified = std::min(m.min_curvature_radius, m.self_distance_lower / 2);
  th << certified;
  std::ostringstream floor;
  floor << "1 - " << thickness_tolerance;
  push("certified thickness radius", th.str(), ">=", floor.str(), certified >= 1.0 - thickness_tolerance);
  push("ropelength vs twice edges", length.to_string(), "<=", text(2 * e.total_edges()),
       certainly_le(length, make_real(2 * e.total_edges())));

  if (p.step >= 1 && p.step <= 3 && p.g >= 2) {
    const BoundValue b = rop_step_bound(p.step, p.g);
    push(to_string(b.formula), length.to_string(), "<=", b.value.to_string(), certainly_le(length, b.value));
  }
  if (p.crossings >= 3 && (p.step == 2 || p.step == 3)) {
    const TheoremBound t = theorem_rop_bound(p.crossings, p.nonalternating_prime);
    const BoundValue &b = p.step == 2 ? t.form_a : t.form_b;
    push(to_string(b.formula), length.to_string(), "<=", b.value.to_string(), certainly_le(length, b.value));
  }
}

} // namespace latknot

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latknot/census.hpp"
#include "latknot/lattice.hpp"
#include "latknot/rope.hpp"

namespace latknot {

using Rational = boost::rational<std::int64_t>;

/// Closed interval guaranteed to contain a real value.
struct Interval {
  double lo = 0, hi = 0;
};

/// rational + pi_coeff * pi + root_coeff * sqrt(radicand), held exactly.
struct ExactReal {
  Rational rational{0};
  Rational pi_coeff{0};
  Rational root_coeff{0};
  std::int64_t radicand = 0;

  bool is_rational() const { return pi_coeff.numerator() == 0 && (root_coeff.numerator() == 0 || radicand == 0); }
  Interval enclosure() const;
  double approx() const;
  std::string to_string() const;
};

enum class Ordering { Less, Equal, Greater, Unknown };

/// Exact when the irrational parts cancel, otherwise decided by enclosures.
/// Unknown only if the enclosures overlap.
Ordering compare(const ExactReal &a, const ExactReal &b);
/// True only when a <= b is certain.
bool certainly_le(const ExactReal &a, const ExactReal &b);

enum class FormulaId {
  step1,
  step2,
  step3,
  thm_len_general_a,
  thm_len_general_b,
  thm_len_nap_a,
  thm_len_nap_b,
  rop_step1,
  rop_step2,
  rop_step3,
  thm_rop_general_a,
  thm_rop_general_b,
  thm_rop_nap_a,
  thm_rop_nap_b,
  thm_rop_decimal_a,
  thm_rop_decimal_b,
  diao_len,
  diao_rop,
  cantarella_rop,
  prior_len,
};

enum class ParityCase { odd, four_k, four_k_plus_2, not_applicable };

struct BoundValue {
  FormulaId formula = FormulaId::step1;
  ParityCase parity = ParityCase::not_applicable;
  ExactReal value;
};

std::string to_string(FormulaId id);
std::string to_string(ParityCase p);
ParityCase parity_of(int g);

/// Edge-count ceiling after step 1, 2 or 3 on a size-g grid (g >= 2).
BoundValue step_bound(int step, int g);
/// Most z-edges a step-3 output may keep: 4g-2 for odd g, 4g-4 for even g.
std::int64_t step3_z_edge_bound(int g);
/// Fewest corners a step output may have: 4g (exact for step 1), 2g, g.
std::int64_t corner_floor(int step, int g);
/// Ropelength ceiling of the smoothed step output in terms of g.
BoundValue rop_step_bound(int step, int g);

struct TheoremBound {
  BoundValue form_a, form_b;
  BoundValue min;
};

/// Bounds in the crossing number c (c >= 3, else CrossingTooSmall). Form a
/// comes from the step-2 bound, form b from the step-3 bound.
TheoremBound theorem_len_bound(int c, bool nonalternating_prime);
TheoremBound theorem_rop_bound(int c, bool nonalternating_prime);
/// Two-decimal upward roundings of the general ropelength forms.
TheoremBound theorem_rop_decimal(int c);

/// Earlier published bounds: diao_len, diao_rop, cantarella_rop, prior_len.
std::vector<BoundValue> comparator_bounds(int c);

struct Provenance {
  int step = 0; // 0 when unknown
  int g = 0;    // 0 when unknown
  int crossings = 0;
  bool nonalternating_prime = false;
  std::optional<std::int64_t> known_min_len;
};

struct CertificateItem {
  std::string check;
  std::string lhs, relation, rhs;
  bool pass = false;
};

struct Certificate {
  Provenance provenance;
  EdgeCensus census;
  std::vector<CertificateItem> items;

  bool pass() const;
  std::string to_text() const;
};

/// Validity, census and every lattice-length comparison that the provenance
/// makes applicable.
Certificate certify(const LatticeKnot &k, const Provenance &provenance);

/// Adds the smoothing checks: length identity, unit thickness and the
/// ropelength ceilings in g and c.
void certify_rope(Certificate &cert, const RopeMetrics &metrics, double thickness_tolerance = 1e-9);

} // namespace latknot

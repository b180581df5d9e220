#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "latknot/bounds.hpp"
#include "latknot/corpus.hpp"
#include "latknot/errors.hpp"
#include "latknot/fold.hpp"
#include "oracles.hpp"

using namespace latknot;

namespace {

constexpr double kPi = std::numbers::pi;

Rational eighths(long long n) { return Rational(n, 8); }

ExactReal rational(long long num, long long den = 1) { return ExactReal{Rational(num, den)}; }

// Ropelength forms in the grid size: twice the step ceiling (worst parity)
// minus (2 - pi/2) times the corner floor.
double rop_from_step2(double g) { return 2 * (0.75 * g * g + 2 * g - 2.75) - (2 - kPi / 2) * 2 * g; }
double rop_from_step3(double g) { return 2 * (0.625 * g * g + 5 * g - 3.625) - (2 - kPi / 2) * g; }

double eval(const BoundValue &b) { return b.value.approx(); }

Certificate certify_stage(const CorpusEntry &e, int step) {
  const auto r = run_pipeline(e.grid, 3);
  return certify(r.stage(step), {step, e.grid.size, e.crossings, e.nonalternating_prime, e.known_min_len});
}

} // namespace

TEST(StepBound, ExamplesAreExact) {
  EXPECT_EQ(step_bound(1, 5).value.rational, Rational(34));
  EXPECT_EQ(step_bound(2, 5).value.rational, Rational(26));
  EXPECT_EQ(step_bound(3, 8).value.rational, Rational(74));
  EXPECT_EQ(step_bound(1, 5).parity, ParityCase::odd);
  EXPECT_EQ(step_bound(3, 8).parity, ParityCase::four_k);
  EXPECT_EQ(step_bound(2, 6).parity, ParityCase::four_k_plus_2);
}

TEST(StepBound, MatchesHandEvaluationForEveryParity) {
  for (int step = 1; step <= 3; ++step)
    for (int g = 2; g <= 100; ++g) {
      const BoundValue b = step_bound(step, g);
      ASSERT_TRUE(b.value.is_rational());
      EXPECT_EQ(b.value.rational, eighths(oracle::eight_step_bound(step, g))) << "step " << step << " g " << g;
      EXPECT_EQ(8 % b.value.rational.denominator(), 0);
      EXPECT_GE(b.value.rational.numerator(), 0);
      EXPECT_EQ(b.formula, step == 1 ? FormulaId::step1 : step == 2 ? FormulaId::step2 : FormulaId::step3);
    }
}

TEST(StepBound, LaterStepsAreSmaller) {
  for (int g = 4; g <= 40; ++g) EXPECT_LT(step_bound(2, g).value.rational, step_bound(1, g).value.rational) << g;
  // 3g^2 - 24g + 21, 3(g-4)^2 and 3(g-2)(g-6) are the step-1 minus step-3 gaps
  // (times 8) by parity, so the step-3 ceiling drops below step 1 from g = 8 on.
  for (int g = 8; g <= 40; ++g) EXPECT_LT(step_bound(3, g).value.rational, step_bound(1, g).value.rational) << g;
  EXPECT_EQ(step_bound(3, 4).value.rational, step_bound(1, 4).value.rational);
  EXPECT_GT(step_bound(3, 5).value.rational, step_bound(1, 5).value.rational);
  EXPECT_EQ(step_bound(3, 6).value.rational, step_bound(1, 6).value.rational);
  EXPECT_EQ(step_bound(3, 7).value.rational, step_bound(1, 7).value.rational);
}

TEST(StepBound, CornerAndZEdgeLimits) {
  EXPECT_EQ(corner_floor(1, 7), 28);
  EXPECT_EQ(corner_floor(2, 7), 14);
  EXPECT_EQ(corner_floor(3, 7), 7);
  EXPECT_EQ(step3_z_edge_bound(7), 26);
  EXPECT_EQ(step3_z_edge_bound(8), 28);
  EXPECT_THROW(step_bound(1, 1), KnotError);
  EXPECT_THROW(step_bound(4, 5), std::invalid_argument);
}

TEST(TheoremLen, Examples) {
  const TheoremBound c3 = theorem_len_bound(3, false);
  EXPECT_EQ(c3.form_a.value.rational, Rational(26));
  EXPECT_EQ(c3.form_b.value.rational, Rational(37));
  EXPECT_EQ(c3.min.value.rational, Rational(26));
  EXPECT_EQ(theorem_len_bound(10, false).min.value.rational, Rational(517, 4));
  EXPECT_EQ(theorem_len_bound(10, true).min.value.rational, Rational(369, 4));
  EXPECT_EQ(theorem_len_bound(10, true).form_b.value.rational, Rational(871, 8));
  EXPECT_EQ(theorem_len_bound(4, false).min.value.rational, Rational(145, 4));
  EXPECT_EQ(theorem_len_bound(4, false).form_b.value.rational, Rational(391, 8));
  EXPECT_THROW(theorem_len_bound(2, false), KnotError);
}

TEST(TheoremLen, FormsAreStepBoundsAtWorstGridSize) {
  for (int c = 3; c <= 100; ++c)
    for (bool nap : {false, true}) {
      const TheoremBound t = theorem_len_bound(c, nap);
      const int g = nap ? c : c + 2;
      // Odd parity gives the largest ceiling at every size.
      const long long worst2 = 6LL * g * g + 16LL * g - 22, worst3 = 5LL * g * g + 40LL * g - 29;
      EXPECT_EQ(t.form_a.value.rational, eighths(worst2)) << c;
      EXPECT_EQ(t.form_b.value.rational, eighths(worst3)) << c;
      EXPECT_EQ(t.min.value.rational, std::min(eighths(worst2), eighths(worst3)));
      EXPECT_EQ(8 % t.min.value.rational.denominator(), 0);
    }
}

TEST(TheoremLen, CrossoverBetweenTwentyOneAndTwentyTwo) {
  // (3/4)c^2 + 5c + 17/4 = (5/8)c^2 + (15/2)c + 71/8 at c = 10 + sqrt(137).
  EXPECT_NEAR(10 + std::sqrt(137.0), 21.70, 0.01);
  for (int c = 3; c <= 21; ++c) EXPECT_EQ(theorem_len_bound(c, false).min.formula, FormulaId::thm_len_general_a) << c;
  for (int c = 22; c <= 60; ++c) EXPECT_EQ(theorem_len_bound(c, false).min.formula, FormulaId::thm_len_general_b) << c;
  EXPECT_LT(theorem_len_bound(21, false).form_a.value.rational, theorem_len_bound(21, false).form_b.value.rational);
  EXPECT_GT(theorem_len_bound(22, false).form_a.value.rational, theorem_len_bound(22, false).form_b.value.rational);
}

TEST(TheoremLen, TableForSmallCrossings) {
  // Hand-evaluated rows of the c = 3..16 table.
  const std::vector<std::pair<int, Rational>> general{{3, Rational(26)}, {5, Rational(48)}, {8, Rational(369, 4)},
                                                      {16, Rational(1105, 4)}};
  for (const auto &[c, v] : general) EXPECT_EQ(theorem_len_bound(c, false).min.value.rational, v) << c;
  EXPECT_EQ(theorem_len_bound(8, true).min.value.rational, Rational(245, 4));
}

TEST(RopStep, MatchesSmoothedStepCeiling) {
  for (int g = 2; g <= 40; ++g) {
    const double worst1 = 2 * (g * g + 2.0 * g) - (2 - kPi / 2) * 4 * g;
    EXPECT_NEAR(eval(rop_step_bound(1, g)), worst1, 1e-9);
    EXPECT_NEAR(eval(rop_step_bound(2, g)), rop_from_step2(g), 1e-9);
    EXPECT_NEAR(eval(rop_step_bound(3, g)), rop_from_step3(g), 1e-9);
  }
}

TEST(TheoremRop, Examples) {
  EXPECT_EQ(theorem_rop_decimal(3).form_a.value.rational, Rational(4774, 100));
  const TheoremBound t3 = theorem_rop_bound(3, false);
  EXPECT_NEAR(eval(t3.form_a), 13.5 + (kPi + 6) * 3 + 2 * kPi + 0.5, 1e-12);
  EXPECT_NEAR(eval(t3.form_a), 47.70, 0.01);
  EXPECT_TRUE(certainly_le(t3.form_a.value, theorem_rop_decimal(3).form_a.value));
  const TheoremBound nap4 = theorem_rop_bound(4, true);
  EXPECT_NEAR(eval(nap4.form_a), 24 + 4 * kPi - 5.5, 1e-12);
  EXPECT_NEAR(eval(nap4.form_b), 20 + 2 * kPi + 32 - 29.0 / 4, 1e-12);
  EXPECT_NEAR(eval(nap4.min), std::min(eval(nap4.form_a), eval(nap4.form_b)), 1e-12);
  EXPECT_THROW(theorem_rop_bound(1, false), KnotError);
}

TEST(TheoremRop, FormsFollowFromStepCeilings) {
  for (int c = 3; c <= 100; ++c)
    for (bool nap : {false, true}) {
      const int g = nap ? c : c + 2;
      const TheoremBound t = theorem_rop_bound(c, nap);
      EXPECT_NEAR(eval(t.form_a), rop_from_step2(g), 1e-9 * g * g);
      EXPECT_NEAR(eval(t.form_b), rop_from_step3(g), 1e-9 * g * g);
    }
}

TEST(TheoremRop, DecimalFormsDominateExactForms) {
  for (int c = 3; c <= 100; ++c) {
    const TheoremBound exact = theorem_rop_bound(c, false), decimal = theorem_rop_decimal(c);
    EXPECT_TRUE(certainly_le(exact.form_a.value, decimal.form_a.value)) << c;
    EXPECT_TRUE(certainly_le(exact.form_b.value, decimal.form_b.value)) << c;
    EXPECT_LT(eval(decimal.form_a) - eval(exact.form_a), 0.01 * c + 0.01);
  }
}

TEST(Comparators, Examples) {
  const auto at3 = comparator_bounds(3);
  ASSERT_EQ(at3.size(), 4u);
  EXPECT_EQ(at3[2].formula, FormulaId::cantarella_rop);
  EXPECT_EQ(at3[2].value.rational, Rational(4457, 100));
  EXPECT_EQ(at3[3].value.rational, Rational(20));
  const double r3 = std::sqrt(3.0);
  EXPECT_NEAR(eval(at3[0]), 136 * 3 * r3 + 84 * 3 + 22 * r3 + 11, 1e-9);
  EXPECT_NEAR(eval(at3[1]), 272 * 3 * r3 + 168 * 3 + 44 * r3 + 22, 1e-9);
}

TEST(Comparators, LargeCrossingNumbers) {
  const double rop_a = eval(theorem_rop_bound(100, false).form_a);
  EXPECT_NEAR(rop_a, 15600.5 + 102 * kPi, 1e-9);
  EXPECT_NEAR(rop_a, 15920.94, 0.01);
  const double cantarella = eval(comparator_bounds(100)[2]);
  EXPECT_NEAR(cantarella, 17175.74, 1e-9);
  EXPECT_EQ(compare(theorem_rop_bound(100, false).form_a.value, comparator_bounds(100)[2].value), Ordering::Less);
  for (int c = 3; c <= 60; ++c)
    EXPECT_EQ(compare(theorem_rop_bound(c, false).min.value, comparator_bounds(c)[1].value), Ordering::Less) << c;
}

TEST(Comparators, NonNegativeEverywhere) {
  for (int c = 3; c <= 100; ++c)
    for (const BoundValue &b : comparator_bounds(c)) EXPECT_GT(eval(b), 0);
  for (int g = 2; g <= 100; ++g)
    for (int s = 1; s <= 3; ++s) EXPECT_GE(eval(rop_step_bound(s, g)), 0) << g;
}

TEST(ExactReal, ComparisonIsExactOrCertain) {
  const ExactReal pi{Rational(0), Rational(1)};
  EXPECT_EQ(compare(rational(355, 113), pi), Ordering::Greater);
  EXPECT_EQ(compare(rational(3141592, 1000000), pi), Ordering::Less);
  EXPECT_EQ(compare(pi, pi), Ordering::Equal);
  const ExactReal root2{Rational(0), Rational(0), Rational(1), 2};
  EXPECT_EQ(compare(rational(14142136, 10000000), root2), Ordering::Greater);
  EXPECT_EQ(compare(rational(3, 2), rational(3, 2)), Ordering::Equal);
  EXPECT_FALSE(certainly_le(rational(2), rational(1)));
  const Interval box = pi.enclosure();
  EXPECT_LE(box.lo, kPi);
  EXPECT_GE(box.hi, kPi);
  EXPECT_LT(box.hi - box.lo, 1e-12);
}

TEST(Certificate, TrefoilAndFigureEight) {
  const CorpusEntry &trefoil = *find_corpus_entry("trefoil");
  for (int step = 1; step <= 3; ++step) EXPECT_TRUE(certify_stage(trefoil, step).pass()) << step;
  const Certificate c2 = certify_stage(trefoil, 2);
  EXPECT_LE(c2.census.total_edges(), 26);
  EXPECT_GE(c2.census.total_edges(), 24);
  const Certificate f3 = certify_stage(*find_corpus_entry("figure_eight"), 2);
  EXPECT_TRUE(f3.pass());
  EXPECT_GE(f3.census.total_edges(), 30);
  EXPECT_LE(f3.census.total_edges(), 36);
}

TEST(Certificate, EveryCorpusStagePasses) {
  for (const auto &e : builtin_corpus())
    for (int step = 1; step <= 3; ++step) {
      const Certificate c = certify_stage(e, step);
      EXPECT_TRUE(c.pass()) << e.name << " step " << step << '\n' << c.to_text();
    }
}

TEST(Certificate, RecordsFailures) {
  const CorpusEntry &trefoil = *find_corpus_entry("trefoil");
  const LatticeKnot settled = run_pipeline(trefoil.grid, 1).stage(1);
  // The settled trefoil has 34 edges, more than the step-2 ceiling of 26.
  const Certificate c = certify(settled, {2, 5, 3, false, 24});
  EXPECT_FALSE(c.pass());
  const Certificate small = certify(settled, {1, 5, 3, false, 40});
  EXPECT_FALSE(small.pass());
  LatticeKnot broken = settled;
  broken.corners.push_back(broken.corners.front());
  EXPECT_FALSE(certify(broken, {}).pass());
}

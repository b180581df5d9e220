#include <gtest/gtest.h>

#include <random>

#include "latknot/corpus.hpp"
#include "latknot/errors.hpp"
#include "latknot/fold.hpp"
#include "latknot/invariant.hpp"
#include "oracles.hpp"

using namespace latknot;

namespace {

LaurentPoly P(const char *s) { return LaurentPoly::parse(s); }

const GridDiagram kTrefoil{5, {1, 2, 3, 4, 5}, {3, 4, 5, 1, 2}};

} // namespace

TEST(Laurent, ArithmeticAndEvaluation) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly a = t - LaurentPoly(1) + LaurentPoly::monomial(1, -1);
  EXPECT_EQ(a.evaluate(1), 1);
  EXPECT_EQ(a.evaluate(-1), -3);
  EXPECT_EQ((a * a).coeff(0), 3);
  EXPECT_EQ((a - a), LaurentPoly());
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ(a.shifted(2).min_exponent(), 1);
}

TEST(Laurent, PrintAndParseRoundTrip) {
  for (const char *s : {"t^-1 - 1 + t", "-t^-1 + 3 - t", "t^-2 - t^-1 + 1 - t + t^2", "2t^-1 - 3 + 2t", "1", "0"}) {
    const LaurentPoly p = P(s);
    EXPECT_EQ(p.to_string(), s);
    EXPECT_EQ(LaurentPoly::parse(p.to_string()), p);
  }
  EXPECT_EQ(P("2*t^-1 - 3 + 2*t"), P("2t^-1 - 3 + 2t"));
}

TEST(Laurent, NormalizationFixesUnitAndShift) {
  const LaurentPoly trefoil = P("t^-1 - 1 + t");
  EXPECT_EQ(P("1 - t + t^2").normalized(), trefoil);
  EXPECT_EQ(P("-t^3 + t^4 - t^5").normalized(), trefoil);
  EXPECT_EQ(trefoil.normalized(), trefoil);
  EXPECT_EQ(trefoil.normalized().normalized(), trefoil);
}

TEST(Bareiss, AgreesWithLaplaceExpansion) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (auto &row : m)
      for (auto &e : row) {
        if (coef(rng) == 0) continue; // keep some zeros to force pivoting
        e = LaurentPoly::monomial(coef(rng), expo(rng)) + LaurentPoly::monomial(coef(rng), expo(rng));
      }
    EXPECT_EQ(bareiss_determinant(m), oracle::laplace_det(m)) << "trial " << trial;
  }
}

TEST(Bareiss, SingularAndEmpty) {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  EXPECT_EQ(bareiss_determinant({{t, t}, {t, t}}), LaurentPoly());
  EXPECT_EQ(bareiss_determinant({}), LaurentPoly(1));
}

TEST(Alexander, ZeroCrossingIsUnknot) {
  PlanarDiagram pd;
  EXPECT_EQ(alexander(pd), LaurentPoly(1));
  EXPECT_EQ(oracle::skein_alexander(pd), LaurentPoly(1));
}

TEST(Alexander, CorpusMatchesTableAndOracles) {
  for (const auto &e : builtin_corpus()) {
    const PlanarDiagram pd = grid_to_planar(e.grid);
    const LaurentPoly a = alexander(pd);
    EXPECT_EQ(a, e.alexander) << e.name;
    EXPECT_EQ(std::abs(a.evaluate(1)), 1) << e.name;
    EXPECT_EQ(std::abs(a.evaluate(-1)) % 2, 1) << e.name;
    if (pd.crossing_count() <= 10) EXPECT_EQ(oracle::skein_alexander(pd), a) << e.name;
  }
}

TEST(Alexander, PublishedSmallKnots) {
  EXPECT_EQ(find_corpus_entry("3_1")->alexander, P("t^-1 - 1 + t"));
  EXPECT_EQ(find_corpus_entry("4_1")->alexander, P("-t^-1 + 3 - t"));
  EXPECT_EQ(find_corpus_entry("5_1")->alexander, P("t^-2 - t^-1 + 1 - t + t^2"));
  EXPECT_EQ(std::abs(find_corpus_entry("3_1")->alexander.evaluate(-1)), 3);
  EXPECT_EQ(std::abs(find_corpus_entry("4_1")->alexander.evaluate(-1)), 5);
}

TEST(Alexander, TorusGridsMatchClosedForm) {
  for (int g = 5; g <= 12; ++g)
    for (int k = 2; 2 * k <= g; ++k) {
      const GridDiagram d = oracle::torus_grid(g, k);
      if (std::gcd(g, k) != 1) continue;
      EXPECT_EQ(alexander(grid_to_planar(d)), oracle::torus_alexander(k, g - k)) << "g=" << g << " k=" << k;
    }
}

TEST(Alexander, RandomGridsAgreeWithSkeinOracle) {
  int checked = 0;
  for (int g = 3; g <= 8; ++g)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const PlanarDiagram pd = grid_to_planar(random_grid(g, seed));
      if (pd.crossing_count() > 10) continue;
      const LaurentPoly a = alexander(pd);
      EXPECT_EQ(oracle::skein_alexander(pd), a) << "g=" << g << " seed=" << seed;
      EXPECT_EQ(std::abs(a.evaluate(-1)) % 2, 1);
      ++checked;
    }
  EXPECT_GT(checked, 100);
}

TEST(Alexander, RejectsLinks) {
  PlanarDiagram pd;
  pd.components = 2;
  EXPECT_THROW(
      {
        try {
          alexander(pd);
        } catch (const KnotError &e) {
          EXPECT_EQ(e.code(), ErrorCode::MultiComponent);
          throw;
        }
      },
      KnotError);
}

TEST(Projection, UnknotRectangle) {
  const GridDiagram d{2, {1, 2}, {2, 1}};
  const auto pipeline = run_pipeline(d, 3);
  for (int s = 1; s <= 3; ++s) EXPECT_EQ(alexander(project(pipeline.stage(s))), LaurentPoly(1));
}

TEST(Projection, IsRegularAndDeterministic) {
  const LatticeKnot k = settle(kTrefoil);
  const ProjectionDiagram a = project(k), b = project(k);
  EXPECT_EQ(a.diagram.passes, b.diagram.passes);
  EXPECT_EQ(a.diagram.signs, b.diagram.signs);
  EXPECT_EQ(a.shear_a, 1);
  EXPECT_EQ(a.shear_b, 2);
  // Each crossing is passed once over and once under.
  std::vector<int> over(a.diagram.crossing_count()), under(a.diagram.crossing_count());
  for (const auto &p : a.diagram.passes) ++(p.over ? over : under)[p.crossing];
  for (int c = 0; c < a.diagram.crossing_count(); ++c) {
    EXPECT_EQ(over[c], 1);
    EXPECT_EQ(under[c], 1);
  }
  EXPECT_EQ(alexander(a), P("t^-1 - 1 + t"));
}

TEST(Projection, StageInvariantMatchesGridDiagram) {
  const LaurentPoly expected = alexander(grid_to_planar(kTrefoil));
  const auto r = run_pipeline(kTrefoil, 3);
  for (int s = 1; s <= 3; ++s) {
    const ProjectionDiagram pd = project(r.stage(s));
    EXPECT_EQ(alexander(pd), expected);
    if (pd.diagram.crossing_count() <= 10) EXPECT_EQ(oracle::skein_alexander(pd.diagram), expected);
  }
}

TEST(Projection, TooFewCornersIsDegenerate) {
  LatticeKnot k{{{0, 0, 0}, {1, 0, 0}}};
  EXPECT_THROW(project(k), KnotError);
}

TEST(Certificate, ConsistencyIsPolynomialEquality) {
  const LaurentPoly trefoil = P("t^-1 - 1 + t"), fig8 = P("-t^-1 + 3 - t"), cinq = P("t^-2 - t^-1 + 1 - t + t^2");
  EXPECT_EQ(same_knot_certificate(trefoil, trefoil), Consistency::Consistent);
  EXPECT_EQ(same_knot_certificate(trefoil, LaurentPoly(1)), Consistency::Inconsistent);
  EXPECT_EQ(same_knot_certificate(fig8, cinq), Consistency::Inconsistent);
  EXPECT_EQ(same_knot_certificate(P("1 - t + t^2"), trefoil), Consistency::Consistent);
}

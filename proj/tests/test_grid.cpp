#include <gtest/gtest.h>

#include "latknot/errors.hpp"
#include "latknot/grid.hpp"
#include "oracles.hpp"

using namespace latknot;

namespace {

const GridDiagram kTrefoil{5, {1, 2, 3, 4, 5}, {3, 4, 5, 1, 2}};

ErrorCode parse_error(const std::string &text) {
  try {
    parse_grid(text);
  } catch (const KnotError &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::MalformedInput;
}

bool has(const GridReport &r, GridViolation v) {
  for (const auto &i : r)
    if (i.kind == v) return true;
  return false;
}

} // namespace

TEST(Grid, ListsRoundTrip) {
  const std::string text = serialize_grid(kTrefoil);
  EXPECT_EQ(parse_grid(text), kTrefoil);
  EXPECT_EQ(parse_grid("X: 1,2,3,4,5 / O: 3,4,5,1,2"), kTrefoil);
  EXPECT_EQ(parse_grid("# trefoil\nX: 1 2 3 4 5\nO: 3 4 5 1 2\n"), kTrefoil);
}

TEST(Grid, MatrixRoundTrip) {
  const std::string matrix = serialize_grid(kTrefoil, GridFormat::Matrix);
  EXPECT_EQ(parse_grid(matrix), kTrefoil);
  // First text line is the top row.
  EXPECT_EQ(matrix.substr(0, 5), ".O..X");
}

TEST(Grid, ValidatorFlagsEachViolation) {
  EXPECT_TRUE(validate_grid(kTrefoil).empty());
  EXPECT_TRUE(has(validate_grid({3, {1, 1, 2}, {2, 3, 1}}), GridViolation::NotAPermutation));
  EXPECT_TRUE(has(validate_grid({3, {1, 2, 3}, {1, 3, 2}}), GridViolation::SameCellXO));
  // Two disjoint 2x2 blocks give a two-component link.
  EXPECT_TRUE(has(validate_grid({4, {1, 2, 3, 4}, {2, 1, 4, 3}}), GridViolation::MultiComponent));
  EXPECT_TRUE(has(validate_grid({1, {1}, {1}}), GridViolation::SameCellXO));
  EXPECT_TRUE(has(validate_grid({0, {}, {}}), GridViolation::BadSize));
  EXPECT_TRUE(has(validate_grid({3, {1, 2}, {2, 1}}), GridViolation::BadSize));
}

TEST(Grid, ParseErrorsCarryCodes) {
  EXPECT_EQ(parse_error("X: 1,2,3"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("X: 1,2,a / O: 2,3,1"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("X: 1,1,2 / O: 2,3,1"), ErrorCode::NotAPermutation);
  EXPECT_EQ(parse_error("X: 1,1 / O: 2,2"), ErrorCode::NotAPermutation);
  EXPECT_EQ(parse_error("X: 1,2,3 / O: 1,3,2"), ErrorCode::SameCellXO);
  EXPECT_EQ(parse_error("X: 1,2,3,4 / O: 2,1,4,3"), ErrorCode::MultiComponent);
  EXPECT_EQ(parse_error("X.\n.X"), ErrorCode::NotAPermutation);
}

TEST(Grid, ComponentsMatchBruteForce) {
  for (int g = 2; g <= 7; ++g)
    for (int s = 0; s < 30; ++s) {
      const GridDiagram d = random_grid(g, s);
      EXPECT_EQ(count_components(d), 1);
      EXPECT_EQ(oracle::brute_force_components(d), 1);
    }
  const GridDiagram link{4, {1, 2, 3, 4}, {2, 1, 4, 3}};
  EXPECT_EQ(count_components(link), oracle::brute_force_components(link));
  EXPECT_EQ(count_components(link), 2);
}

TEST(Grid, SmallestDiagramIsTheRectangle) {
  const GridDiagram d = parse_grid("X: 1,2 / O: 2,1");
  EXPECT_EQ(d.size, 2);
  EXPECT_EQ(grid_to_planar(d).crossing_count(), 0);
  for (int s = 0; s < 10; ++s) EXPECT_EQ(grid_to_planar(random_grid(2, s)).crossing_count(), 0);
}

TEST(Grid, RandomSamplesAreValidKnots) {
  for (int s = 0; s < 1000; ++s) {
    const GridDiagram d = random_grid(4, s);
    EXPECT_TRUE(validate_grid(d).empty());
    EXPECT_EQ(oracle::brute_force_components(d), 1);
  }
  for (int s = 1; s <= 500; ++s) EXPECT_TRUE(validate_grid(random_grid(5, s)).empty());
}

TEST(Grid, RandomGridIsSeededAndValid) {
  for (int g = 2; g <= 12; ++g) {
    EXPECT_EQ(random_grid(g, 42), random_grid(g, 42));
    EXPECT_TRUE(validate_grid(random_grid(g, 42)).empty());
  }
  EXPECT_NE(random_grid(9, 1), random_grid(9, 2));
  EXPECT_THROW(random_grid(1, 0), KnotError);
}

TEST(Planar, CrossingCountMatchesBruteForce) {
  for (int g = 2; g <= 10; ++g)
    for (int s = 0; s < 20; ++s) {
      const GridDiagram d = random_grid(g, s);
      const PlanarDiagram pd = grid_to_planar(d);
      EXPECT_EQ(pd.crossing_count(), oracle::brute_force_crossings(d));
      EXPECT_LE(pd.crossing_count(), (g - 1) * (g - 1));
      EXPECT_EQ(static_cast<int>(pd.passes.size()), 2 * pd.crossing_count());
    }
}

TEST(Planar, TrefoilHasThreeCrossingsOfOneSign) {
  const PlanarDiagram pd = grid_to_planar(kTrefoil);
  ASSERT_EQ(pd.crossing_count(), 3);
  EXPECT_EQ(pd.signs[0], pd.signs[1]);
  EXPECT_EQ(pd.signs[1], pd.signs[2]);
  // Alternating diagram: passes alternate over and under.
  for (std::size_t i = 0; i < pd.passes.size(); ++i)
    EXPECT_NE(pd.passes[i].over, pd.passes[(i + 1) % pd.passes.size()].over);
}

TEST(Planar, MirrorFlipsEverySign) {
  // Reflecting the columns mirrors the diagram.
  const GridDiagram d = random_grid(7, 3);
  GridDiagram mirrored{d.size, {}, {}};
  for (int r = 1; r <= d.size; ++r) {
    mirrored.x_col.push_back(d.size + 1 - d.x_col[r - 1]);
    mirrored.o_col.push_back(d.size + 1 - d.o_col[r - 1]);
  }
  const PlanarDiagram a = grid_to_planar(d), b = grid_to_planar(mirrored);
  ASSERT_EQ(a.crossing_count(), b.crossing_count());
  int wa = 0, wb = 0;
  for (int s : a.signs) wa += s;
  for (int s : b.signs) wb += s;
  EXPECT_EQ(wa, -wb);
}

TEST(Planar, EdgesFollowPassOrder) {
  const PlanarDiagram pd = grid_to_planar(kTrefoil);
  const int m = static_cast<int>(pd.passes.size());
  for (const auto &c : pd.crossings()) {
    // Incoming under edge is followed by the outgoing under edge two slots later.
    EXPECT_EQ((c.edges[0] + 1) % m, c.edges[2]);
  }
}

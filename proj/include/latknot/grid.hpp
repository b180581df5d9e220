#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/errors.hpp"

namespace latknot {

/// A g x g grid diagram stored as two permutations of the columns.
///
/// Rows are numbered bottom-to-top and columns left-to-right, both 1..g.
/// Row r carries a horizontal strand from the X marker in column x_col[r-1]
/// to the O marker in column o_col[r-1]; column c carries a vertical strand
/// joining the two rows that have a marker in c. Traversal runs X -> O along
/// rows and O -> X along columns. The vertical strand is always over.
struct GridDiagram {
  int size = 0;
  std::vector<int> x_col; // index r-1 -> column of X in row r
  std::vector<int> o_col; // index r-1 -> column of O in row r

  bool operator==(const GridDiagram &) const = default;

  /// Row holding the X (resp. O) in column c, or 0 if none.
  int x_row(int column) const;
  int o_row(int column) const;
};

enum class GridViolation { NotAPermutation, SameCellXO, MultiComponent, BadSize };

struct GridIssue {
  GridViolation kind;
  std::string detail;
};

using GridReport = std::vector<GridIssue>;

/// Lists every violated invariant; empty iff the diagram is a valid knot diagram.
GridReport validate_grid(const GridDiagram &d);

/// Number of cycles of the X-O incidence graph (1 for a knot).
int count_components(const GridDiagram &d);

/// Accepts the `X: ... / O: ...` list form or a character matrix of X, O and '.'.
/// Throws KnotError on malformed or invalid input.
GridDiagram parse_grid(std::string_view text);

enum class GridFormat { Lists, Matrix };
std::string serialize_grid(const GridDiagram &d, GridFormat format = GridFormat::Lists);

/// Uniform rejection sampling of permutation pairs until a valid knot diagram appears.
GridDiagram random_grid(int g, std::uint64_t seed);

/// Signed Gauss code of a knot projection with crossing data.
///
/// `passes` lists the crossings in traversal order; each crossing appears
/// exactly twice, once over and once under. Crossing signs follow the
/// right-hand rule for the projection viewed from +z.
struct PlanarDiagram {
  struct Pass {
    int crossing;
    bool over;
    bool operator==(const Pass &) const = default;
  };
  /// Four incident edge ids in counterclockwise order, starting at the
  /// incoming under-edge. Edge i runs from pass i to pass i+1 (cyclically).
  struct Crossing {
    int sign = 0;
    int edges[4] = {0, 0, 0, 0};
  };

  std::vector<int> signs;
  std::vector<Pass> passes;
  int components = 1;

  int crossing_count() const { return static_cast<int>(signs.size()); }
  std::vector<Crossing> crossings() const;
};

/// Crossing diagram of the grid: one crossing per transversal intersection
/// of a vertical and a horizontal strand, vertical over.
PlanarDiagram grid_to_planar(const GridDiagram &d);

} // namespace latknot

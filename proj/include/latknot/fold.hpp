#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "latknot/census.hpp"
#include "latknot/grid.hpp"
#include "latknot/lattice.hpp"

namespace latknot {

/// Places row strands as x-sticks on z-level 1 and column strands as y-sticks
/// on z-level 2, joined by one z-edge at every marker.
LatticeKnot settle(const GridDiagram &d);

/// Which half is rotated onto the other. Positive folds the half with the
/// larger coordinate; Automatic tries both and keeps the shorter result.
enum class FoldSide { Automatic, Positive, Negative };

struct FoldReport {
  FoldSide side = FoldSide::Positive;
  /// Fold line coordinate along the folded axis.
  std::int64_t fold_at = 0;
  std::int64_t removed_overlap_edges = 0;
  std::int64_t broken_sticks_reconnected = 0;
  std::int64_t added_y_edges = 0;
  std::int64_t added_z_edges = 0;
  /// Sticks moved one level toward the fold plane (each saves two z-edges).
  std::int64_t lowered_sticks = 0;
  /// Sticks lifted onto the fold plane before folding (each costs two z-edges).
  std::int64_t raised_sticks = 0;
  std::array<std::int64_t, 3> removed{0, 0, 0};
  std::array<std::int64_t, 3> added{0, 0, 0};
  EdgeCensus pre, post;
};

struct FoldResult {
  LatticeKnot knot;
  FoldReport report;
};

/// Fold line position for a size-g diagram: (g+1)/2 for odd g, g/2+1 for even g
/// when folding the positive half, and its mirror g+1-f for the negative half.
std::int64_t fold_line(int g, FoldSide side);

/// Rotates one x-half of a settled knot by 180 degrees about the line
/// {x = fold line, z = 1}, deletes doubled x-edges and pulls the y-sticks on the
/// fold level (and on the outer level for even g) down to z-level 1.
FoldResult fold_horizontal(const LatticeKnot &k, int g, FoldSide side = FoldSide::Automatic);

/// Rotates one y-half of a horizontally folded knot about {y = fold line, z = 2},
/// deletes doubled y-edges and reconnects each severed stick with a bridge of
/// two y-edges and 2|2-z| z-edges routed just outside the fold line.
FoldResult fold_vertical(const LatticeKnot &k, int g, FoldSide side = FoldSide::Automatic);

struct PipelineResult {
  int steps = 0;
  LatticeKnot settled;
  FoldResult horizontal;
  FoldResult vertical;
  /// Horizontal side under the selected vertical fold.
  FoldSide vertical_parent_side = FoldSide::Positive;

  const LatticeKnot &stage(int step) const;
};

/// Runs steps 1..steps (1 <= steps <= 3). Step 2 keeps the shorter of both
/// horizontal sides; step 3 keeps the shortest of the four side combinations.
PipelineResult run_pipeline(const GridDiagram &d, int steps = 3);

std::string to_string(FoldSide side);

} // namespace latknot

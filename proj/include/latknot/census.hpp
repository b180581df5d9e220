#pragma once

#include <cstdint>

#include "latknot/lattice.hpp"

namespace latknot {

/// Per-axis unit edges and sticks plus corners of a canonical lattice knot.
struct EdgeCensus {
  std::int64_t x_edges = 0, y_edges = 0, z_edges = 0;
  std::int64_t x_sticks = 0, y_sticks = 0, z_sticks = 0;
  std::int64_t corners = 0;

  std::int64_t total_edges() const { return x_edges + y_edges + z_edges; }
  std::int64_t edges(int axis) const { return axis == 0 ? x_edges : axis == 1 ? y_edges : z_edges; }
  bool operator==(const EdgeCensus &) const = default;
};

EdgeCensus edge_census(const LatticeKnot &k);

} // namespace latknot

#include "latknot/census.hpp"

namespace latknot {

EdgeCensus edge_census(const LatticeKnot &k) {
  EdgeCensus c;
  c.corners = static_cast<std::int64_t>(k.corners.size());
  for (const Stick &s : sticks(k)) {
    if (s.axis < 0) throw KnotError(ErrorCode::MalformedInput, "census of a non-lattice polygon");
    std::int64_t *edges[3] = {&c.x_edges, &c.y_edges, &c.z_edges};
    std::int64_t *count[3] = {&c.x_sticks, &c.y_sticks, &c.z_sticks};
    *edges[s.axis] += s.length;
    *count[s.axis] += 1;
  }
  return c;
}

} // namespace latknot

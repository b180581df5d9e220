#pragma once

#include <cstdint>
#include <vector>

#include "latknot/grid.hpp"
#include "latknot/laurent.hpp"
#include "latknot/lattice.hpp"

namespace latknot {

/// Crossing diagram of a lattice knot under the map
/// (x, y, z) -> (scale*x + shear_a*z, scale*y + shear_b*z).
struct ProjectionDiagram {
  PlanarDiagram diagram;
  int shear_a = 0, shear_b = 0;
  std::int64_t scale = 0;
};

/// Tries the shears (1,2), (2,1), (1,3), (3,1), (2,3), (3,2) in order and keeps
/// the first regular projection. Throws NoRegularShear if none is regular.
ProjectionDiagram project(const LatticeKnot &k);

/// Normalized Alexander polynomial from the Wirtinger-Fox matrix of the diagram,
/// evaluated with fraction-free elimination. Throws MultiComponent for links.
LaurentPoly alexander(const PlanarDiagram &pd);
inline LaurentPoly alexander(const ProjectionDiagram &pd) { return alexander(pd.diagram); }

/// Exact determinant of a square matrix over Z[t, 1/t].
LaurentPoly bareiss_determinant(const std::vector<std::vector<LaurentPoly>> &matrix);

enum class Consistency { Consistent, Inconsistent };

/// Equality of normalized Alexander polynomials. Consistent is only a
/// necessary condition for two curves to have the same knot type.
Consistency same_knot_certificate(const LaurentPoly &a, const LaurentPoly &b);

} // namespace latknot

#pragma once

#include <vector>

#include "hyperdga/geom.hpp"
#include "hyperdga/predicates.hpp"

namespace hyperdga {

/// Facet of the lifted hull: D = n+1 vertex ids ordered so the hull
/// interior is on the negative side, with neighbor facet ids aligned to the
/// omitted vertex of each ridge.
struct HullFacet {
  std::vector<int> verts;
  std::vector<int> neighbors;
  bool alive = true;
};

struct LiftedHull {
  int base_dim = 0;
  std::vector<HullFacet> facets;  // includes dead facets; check alive

  std::vector<const HullFacet*> alive_facets() const {
    std::vector<const HullFacet*> out;
    for (const auto& f : facets)
      if (f.alive) out.push_back(&f);
    return out;
  }
};

/// Incremental convex hull of the points (bases[i], heights[i]) in R^(n+1).
/// Ties are handled by the symbolic height perturbation inside
/// LiftedOrientation, so the hull is simplicial and deterministic. Throws
/// DegenerateInput when the base points are affinely dependent (no
/// full-dimensional lift exists) or when a structural invariant breaks.
/// Requires at least n+2 points.
LiftedHull build_lifted_hull(const std::vector<Vec>& bases,
                             const std::vector<double>& heights);

}  // namespace hyperdga

#pragma once

#include <utility>

#include "hyperdga/power_delaunay.hpp"

namespace hyperdga {

struct MinNormResult {
  Vec point;
  double norm = 0.0;
};

/// Closed-form minimum-norm point for the 1-dimensional dual faces arising
/// in the plane: a point, a segment between two dual vertices, or an apex
/// plus an outward ray. Projects the origin onto each piece and clamps.
MinNormResult min_norm_point_2d(const DualFace& face);

struct MinNormQpOptions {
  double gap_tolerance = 1e-10;
  int max_iterations = 1000;
};

/// Minimum-norm point over conv(vertices) + cone(rays) by the iterative
/// minimum-norm-point scheme: keep a small active set of generators, solve
/// the affine subproblem exactly, line-search back into the feasible
/// weights, and stop once the duality gap drops below tolerance. Starts
/// from the generator vertex of smallest norm (ties by order). Throws
/// MaxIterations with diagnostics if the cap is hit.
MinNormResult min_norm_point_qp(const DualFace& face,
                                const MinNormQpOptions& opts = {});

}  // namespace hyperdga

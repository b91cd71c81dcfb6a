#pragma once

#include <span>
#include <vector>

#include "hyperdga/geom.hpp"

namespace hyperdga {

/// Sign predicates for the lifted-hull construction.
///
/// Sites live in R^n and carry a lifted height. All tests reduce to signs of
/// homogeneous determinants with rows (base, height, 1). Evaluation is
/// adaptive: a filtered double determinant with a rigorous error bound,
/// falling back to exact rational arithmetic when the filter is
/// inconclusive.
///
/// Ties (co-spherical configurations) are resolved by a symbolic
/// perturbation of the heights: site i is pushed down by eps^(i+1) for an
/// infinitesimal eps > 0, so lower-index sites move first. Because each
/// height appears in exactly one row, the perturbed determinant expands as
/// det(A) - sum_i eps^(i+1) * cof_i with no higher-order terms, and the
/// first nonzero cofactor in index order decides the sign. A zero result
/// therefore means the configuration is degenerate in the base coordinates
/// themselves (points in a common vertical hyperplane), which callers treat
/// as "not visible" / "not a lower facet".
class LiftedOrientation {
 public:
  LiftedOrientation(const std::vector<Vec>& bases, const std::vector<double>& heights);

  int dimension() const { return dim_; }
  int count() const { return static_cast<int>(bases_->size()); }

  /// Perturbed orientation sign of the n+2 given sites. Returns +1, -1, or
  /// 0 (base-degenerate only).
  int orient(std::span<const int> sites) const;

  /// Orientation of the hyperplane through n+1 sites against the direction
  /// of steepest height descent: +1 when a point far below the hyperplane
  /// lies on the positive side of the row order, 0 when the hyperplane is
  /// vertical. Heights enter the hyperplane but the perturbation cancels,
  /// so this is an unperturbed sign.
  int orient_below(std::span<const int> sites) const;

 private:
  const std::vector<Vec>* bases_;
  const std::vector<double>* heights_;
  int dim_;
};

/// Greedily selects indices of affinely independent points, starting from
/// index 0, deciding independence in exact rational arithmetic. Returns at
/// most max_rank+1 indices; fewer means the whole set is affinely dependent
/// below that rank.
std::vector<int> affine_basis(const std::vector<Vec>& points, int max_rank);

}  // namespace hyperdga

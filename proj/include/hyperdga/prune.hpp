#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperdga/minnorm.hpp"
#include "hyperdga/power_delaunay.hpp"

namespace hyperdga {

struct PruneOptions {
  /// Faces whose dual polytope stays at squared... Euclidean norm within
  /// this tolerance of 1 are removed: the model is the open ball, so a
  /// tangent face does not meet it.
  double eps_prune = 1e-10;
  /// Route every face through the iterative QP instead of the planar
  /// closed forms (n = 2 only uses this for cross-checking).
  bool force_qp = false;
  MinNormQpOptions qp;
};

struct FaceDecision {
  std::vector<int> vertices;  // 2 entries for an edge, n+1 for a simplex
  double min_norm = 0.0;
  std::string method;  // "algebraic2d" or "qp"
  bool kept = true;
};

struct PruneReport {
  std::vector<std::pair<int, int>> kept_edges;
  std::vector<std::pair<int, int>> removed_edges;
  std::vector<std::vector<int>> kept_simplices;
  std::vector<std::vector<int>> removed_simplices;
  std::vector<FaceDecision> decisions;

  std::string to_json() const;
};

/// Marks every face of the complex as kept or removed depending on whether
/// its dual power polytope reaches strictly inside the open unit ball
/// (minimum norm < 1 - eps_prune). The kept edges form the hyperbolic
/// Delaunay graph. Geometry is untouched, so pruning is idempotent.
std::pair<DelaunayComplex, PruneReport> prune_complex(const DelaunayComplex& complex,
                                                      const PruneOptions& opts = {});

}  // namespace hyperdga

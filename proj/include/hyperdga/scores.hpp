#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperdga/models.hpp"
#include "hyperdga/power_delaunay.hpp"

namespace hyperdga {

/// Finite Klein-ball point set with a group tag (0 = A, 1 = B, higher for
/// pairwise mode) and a stable id per point.
struct LabeledPointSet {
  std::vector<Vec> points;
  std::vector<int> labels;
  std::vector<int> ids;
};

struct EdgeCounts {
  int total = 0;
  int heterogeneous = 0;
  std::array<int, 2> homogeneous{0, 0};
};

struct ScoreReport {
  std::optional<double> hyperdga;
  std::optional<double> chamfer;
  std::optional<double> wasserstein;  // absent when |A| != |B|
  EdgeCounts edges;
  int pruned_edges = 0;
  std::string model_in = "klein";
  std::array<int, 2> n_points{0, 0};

  /// Fixed-schema JSON with 17-significant-digit floats.
  std::string to_json() const;
};

/// Edge-count fragment of the similarity score: kept edges of the pruned
/// complex are classified by the labels of their endpoints (site index ->
/// label). Throws EmptyGraph when no edge survived pruning.
EdgeCounts count_edges(const DelaunayComplex& pruned, const std::vector<int>& labels);

/// The similarity score itself: 1 - heterogeneous/total over the kept
/// edges, in [0, 1].
double hyperdga_score(const EdgeCounts& counts);

/// Symmetrized sum of squared nearest-neighbor geodesic distances,
///   sum_{p in A} min_q d^2(p,q) + sum_{q in B} min_p d^2(p,q),
/// with d the Klein-ball distance.
double chamfer(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// Discrete optimal transport: min over bijections of the summed geodesic
/// distances, solved exactly. Requires |a| = |b| >= 1. Internally
/// canonicalized so swapping the arguments returns the identical double.
double wasserstein(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace hyperdga

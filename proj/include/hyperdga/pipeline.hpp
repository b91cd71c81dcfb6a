#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdga/prune.hpp"
#include "hyperdga/scores.hpp"

namespace hyperdga {

struct PipelineOptions {
  double boundary_margin = kDefaultBoundaryMargin;
  double eps_prune = 1e-10;
  bool want_hyperdga = true;
  bool want_chamfer = true;
  bool want_wasserstein = true;
  /// When set, a cardinality mismatch raises instead of reporting the
  /// transport distance as absent.
  bool wasserstein_required = false;
  /// Build the complex even when the edge score is not requested (needed
  /// for rendering or dumps).
  bool keep_complex = false;
};

/// Everything the pipeline produced: the pruned complex (when built), the
/// pruning report, per-site group labels / original ids in site order, and
/// the score report.
struct PipelineResult {
  std::optional<DelaunayComplex> complex;
  PruneReport prune_report;
  std::vector<Vec> site_points;  // Klein coordinates in site order
  std::vector<int> site_labels;
  std::vector<int> site_ids;
  ScoreReport report;
};

/// Runs the full scoring pipeline on two Klein-ball point sets: converts
/// them to power sites, builds the regular triangulation of the union,
/// prunes faces outside the open ball, and evaluates the requested
/// metrics. The union is ordered canonically (lexicographic coordinates)
/// before triangulation so that swapping A and B gives the identical
/// result even on degenerate inputs.
PipelineResult score_sets(const std::vector<Vec>& a_klein,
                          const std::vector<Vec>& b_klein,
                          const PipelineOptions& opts = {},
                          const std::string& model_in = "klein");

}  // namespace hyperdga

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperdga/geom.hpp"
#include "hyperdga/models.hpp"

namespace hyperdga {

using BitVector = std::vector<std::uint8_t>;

/// Complete binary tree of a given depth whose 2^d - 1 nodes carry binary
/// vectors of length 2^d - 1. Node i's vector is the indicator of its
/// ancestor chain (root included) over seed-shuffled coordinate positions,
/// so the graph geodesic distance between any two nodes equals the Hamming
/// distance of their vectors.
struct BinaryTreeDataset {
  int depth = 0;
  std::vector<BitVector> nodes;               // heap order: children of i are 2i+1, 2i+2
  std::vector<int> parent;                    // -1 for the root
  std::vector<std::pair<int, int>> edges;     // (parent, child)

  int node_count() const { return static_cast<int>(nodes.size()); }
  int vector_length() const { return node_count(); }

  /// CSV export, one row per node: id, parent_id, bit string.
  std::string to_csv() const;
};

/// Builds the dataset; deterministic for a fixed (depth, seed). The seed
/// shuffles which coordinate position belongs to which node, which leaves
/// all Hamming distances intact. Depth range is 2..12 so vectors stay
/// desk-scale. The random source is mt19937_64 throughout this module.
BinaryTreeDataset generate_tree(int depth, std::uint64_t seed);

/// Flips each coordinate of each node independently with probability
/// flip_probability; deterministic given the seed.
std::vector<BitVector> perturb(const BinaryTreeDataset& ds, double flip_probability,
                               std::uint64_t seed);

struct LayoutOptions {
  /// Geodesic length of every tree edge in the layout.
  double edge_length = 1.0;
  /// Geodesic displacement applied per unit of normalized Hamming
  /// mismatch when embedding perturbed vectors (vector_layout only).
  double displacement_scale = 2.5;
  /// Extra mismatch "bits" added to every node's displacement. The sweep
  /// harness sets this to 1 so that a node whose vector happens to survive
  /// the flips unchanged still moves off its reference point; the scored
  /// union must be duplicate-free.
  double displacement_bias = 0.0;
  double boundary_margin = kDefaultBoundaryMargin;
};

/// Deterministic planar embedding of the tree in the Klein ball: the root
/// sits at the origin and each child is placed exactly edge_length (in
/// geodesic distance) from its parent, in the middle of its angular
/// sector; sectors halve at every level so subtrees never share an angle.
std::vector<Vec> tree_layout(const BinaryTreeDataset& ds, const LayoutOptions& opts = {});

/// Embeds arbitrary bit vectors (same shape as ds.nodes) relative to the
/// tree layout: node i keeps its layout direction and is pushed radially
/// outward by displacement_scale * Hamming(v_i, reference_i) / length.
/// With unperturbed vectors this reproduces tree_layout exactly, and the
/// mean displacement grows linearly in the flip probability, which is what
/// the evaluation harness needs from an encoder stand-in.
std::vector<Vec> vector_layout(const BinaryTreeDataset& ds,
                               const std::vector<BitVector>& vectors,
                               const LayoutOptions& opts = {});

/// Number of differing coordinates; the vectors must have equal length.
int hamming(const BitVector& u, const BitVector& v);

/// Product-moment correlation; throws ZeroVariance when either input is
/// constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Rank correlation (average ranks on ties).
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace hyperdga

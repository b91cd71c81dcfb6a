#pragma once

// Brute-force reference implementations used only by tests. Everything here
// evaluates definitions directly (grids, exhaustive subsets, permutations)
// and stays independent of the library's construction paths.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hyperdga/geom.hpp"
#include "hyperdga/power_delaunay.hpp"

namespace oracles {

using hyperdga::Vec;

double unit_double(std::mt19937_64& rng);
/// Uniform point in the n-ball of the given radius.
Vec random_ball_point(std::mt19937_64& rng, int n, double radius);

/// All (n+1)-subsets of the points whose circumsphere holds no other point
/// strictly inside (classic empty-circumsphere Delaunay test, zero
/// weights). Near-ties within rel_tol of the radius abort via *ambiguous.
std::vector<std::vector<int>> delaunay_simplices_bruteforce(
    const std::vector<Vec>& points, double rel_tol, bool* ambiguous);

std::set<std::pair<int, int>> edges_of_simplices(
    const std::vector<std::vector<int>>& simplices);

/// Grid-sampled power-diagram adjacency: every pair of sites owning
/// 4-neighboring grid cells, with one witness midpoint per pair.
struct GridAdjacency {
  std::set<std::pair<int, int>> pairs;
  std::vector<Vec> witness;  // indexed like `order` below
  std::vector<std::pair<int, int>> order;
};
GridAdjacency power_grid_adjacency(const std::vector<hyperdga::PowerSite>& sites,
                                   const Vec& lo, const Vec& hi, int cells);

/// Is a power-diagram discrepancy explainable by grid resolution? True when
/// every sample along the face (clipped to the box) has a third site within
/// the local two-grid-step margin, or the face misses the box entirely.
bool power_edge_ambiguous(const std::vector<hyperdga::PowerSite>& sites, int a, int b,
                          const hyperdga::DualFace& face, const Vec& lo, const Vec& hi,
                          double step);

/// True when the witness point for pair (a, b) could belong to a boundary
/// with some third cell within the grid margin.
bool power_witness_ambiguous(const std::vector<hyperdga::PowerSite>& sites, int a,
                             int b, const Vec& witness, double step);

/// Every grid midpoint that separates cells a and b (for Hausdorff-style
/// comparisons of a dual face against the sampled boundary).
std::vector<Vec> power_pair_boundary(const std::vector<hyperdga::PowerSite>& sites,
                                     int a, int b, const Vec& lo, const Vec& hi,
                                     int cells);

/// Direct evaluation of the nearest-site definition on the open unit disk:
/// for each pair, search the grid for a point whose two nearest sites (by
/// the Klein geodesic distance) are the pair, changing ownership across a
/// 4-neighborhood. `unambiguous_pairs` additionally requires the third
/// nearest site to stay clear by the local distance margin.
struct HyperbolicGridOracle {
  std::set<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> unambiguous_pairs;
  double step = 0.0;
};
HyperbolicGridOracle hyperbolic_delaunay_grid(const std::vector<Vec>& klein_points,
                                              int cells);

/// Ambiguity test for a kept-but-unwitnessed edge: the dual face either
/// pokes into the disk by less than the grid can see or always has a third
/// site within the local margin.
bool hyperbolic_edge_ambiguous(const std::vector<Vec>& klein_points, int a, int b,
                               const hyperdga::DualFace& face, double step);

/// Exhaustive minimum over all vertex subsets of the projection of the
/// origin onto their affine hull, restricted to convex coefficients.
double min_norm_over_polytope_bruteforce(const std::vector<Vec>& vertices);

/// Exact assignment optimum by enumerating all permutations (n <= 9).
double wasserstein_bruteforce(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace oracles

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperdga/geom.hpp"
#include "hyperdga/models.hpp"

namespace hyperdga {

/// Euclidean site with an additive squared weight (may be negative). The
/// power distance to x is |x - center|^2 - squared_weight.
struct PowerSite {
  Vec center;
  double squared_weight = 0.0;
  int source_index = -1;
};

/// Image of a Klein point under the site/weight map
///   s = p / (2 sqrt(1-|p|^2)),
///   r_s^2 = |p|^2 / (4 (1-|p|^2)) - 1 / sqrt(1-|p|^2),
/// which turns hyperbolic Voronoi cells into Euclidean power cells.
PowerSite klein_to_power_site(const Vec& klein_point, int source_index = -1,
                              double boundary_margin = kDefaultBoundaryMargin);

/// Dual polytope of a face of the complex: convex hull of the listed
/// vertices plus the conic span of the (unit) rays.
struct DualFace {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  bool unbounded() const { return !rays.empty(); }
};

struct ComplexSimplex {
  std::vector<int> vertices;  // n+1 site indices, ascending
  Vec dual_vertex;            // power center: equal power distance to all vertices
  double condition = 1.0;     // smallest/largest pivot ratio of the center solve
  bool kept = true;
};

struct ComplexEdge {
  int a = 0, b = 0;  // a < b
  bool kept = true;
};

/// Regular triangulation of a set of power sites: the projection of the
/// lower hull of the sites lifted to height |s|^2 - r_s^2. The 1-skeleton
/// matches power-diagram adjacency; each simplex stores its dual power
/// vertex. Co-spherical ties are broken by a symbolic perturbation that
/// grows the weights infinitesimally, lower source order first.
struct DelaunayComplex {
  int dimension = 0;
  std::vector<PowerSite> sites;
  std::vector<ComplexSimplex> simplices;       // sorted lexicographically
  std::vector<ComplexEdge> edges;              // sorted by (a, b)
  std::vector<std::vector<int>> edge_simplices;  // edge index -> simplex indices

  int find_edge(int a, int b) const;
};

DelaunayComplex regular_triangulation(std::vector<PowerSite> sites);

/// Dual face of an edge: the power-diagram face separating the two cells.
/// Vertices are the dual power vertices of the incident simplices; for
/// faces reaching infinity the recession directions are enumerated from the
/// active-constraint subsets of the cell-dominance inequalities. For n = 2
/// this yields the segment between the two adjacent triangle centers, or an
/// apex plus an outward ray on the hull.
DualFace dual_face_of_edge(const DelaunayComplex& complex, int edge_index);

/// Debug dump (vertices, edges, simplices, dual vertices) as JSON text.
std::string complex_to_json(const DelaunayComplex& complex);

}  // namespace hyperdga

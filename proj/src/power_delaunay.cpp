#include "hyperdga/power_delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hyperdga/detail/fmt.hpp"
#include "hyperdga/errors.hpp"
#include "hyperdga/hull.hpp"
#include "hyperdga/predicates.hpp"

namespace hyperdga {

namespace {

double lifted_height(const PowerSite& s) { return norm2(s.center) - s.squared_weight; }

// Solves 2 (s_j - s_0) . x = h_j - h_0 for the point with equal power
// distance to all simplex generators. Plain elimination with partial
// pivoting; `condition` reports the smallest-to-largest pivot ratio as a
// quality diagnostic for near-degenerate simplices.
Vec power_center(const std::vector<PowerSite>& sites, const std::vector<int>& verts,
                 double* condition) {
  const int n = static_cast<int>(sites[verts[0]].center.size());
  std::vector<double> a(static_cast<std::size_t>(n) * (n + 1));
  const Vec& s0 = sites[verts[0]].center;
  const double h0 = lifted_height(sites[verts[0]]);
  for (int r = 0; r < n; ++r) {
    const Vec& sj = sites[verts[r + 1]].center;
    for (int c = 0; c < n; ++c) a[r * (n + 1) + c] = 2.0 * (sj[c] - s0[c]);
    a[r * (n + 1) + n] = lifted_height(sites[verts[r + 1]]) - h0;
  }
  double min_piv = 0.0, max_piv = 0.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * (n + 1) + col]) > std::abs(a[piv * (n + 1) + col])) piv = r;
    for (int c = 0; c <= n; ++c) std::swap(a[col * (n + 1) + c], a[piv * (n + 1) + c]);
    const double p = std::abs(a[col * (n + 1) + col]);
    min_piv = (col == 0) ? p : std::min(min_piv, p);
    max_piv = std::max(max_piv, p);
    if (p == 0.0) throw DegenerateInput("degenerate simplex in power center solve");
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * (n + 1) + col] / a[col * (n + 1) + col];
      for (int c = col; c <= n; ++c) a[r * (n + 1) + c] -= f * a[col * (n + 1) + c];
    }
  }
  Vec x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = a[r * (n + 1) + n];
    for (int c = r + 1; c < n; ++c) s -= a[r * (n + 1) + c] * x[c];
    x[r] = s / a[r * (n + 1) + r];
  }
  *condition = (max_piv > 0.0) ? min_piv / max_piv : 0.0;
  return x;
}

// 1-dimensional nullspace of an m x n matrix (m = n-1 independent rows
// expected); returns empty when the nullspace is not 1-dimensional.
Vec nullspace_direction(std::vector<double> a, int m, int n) {
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = row;
    for (int r = row + 1; r < m; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) < 1e-13) continue;
    for (int c = 0; c < n; ++c) std::swap(a[row * n + c], a[piv * n + c]);
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const double f = a[r * n + col] / a[row * n + col];
      for (int c = 0; c < n; ++c) a[r * n + c] -= f * a[row * n + c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != n - 1) return {};
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;
  Vec d(n, 0.0);
  d[free_col] = 1.0;
  for (int r = 0; r < row; ++r)
    d[pivot_col[r]] = -a[r * n + free_col] / a[r * n + pivot_col[r]];
  const double len = norm(d);
  return scaled(d, 1.0 / len);
}

void enumerate_subsets(int count, int take, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn, int from = 0) {
  if (static_cast<int>(cur.size()) == take) {
    fn(cur);
    return;
  }
  for (int i = from; i < count; ++i) {
    cur.push_back(i);
    enumerate_subsets(count, take, cur, fn, i + 1);
    cur.pop_back();
  }
}

}  // namespace

PowerSite klein_to_power_site(const Vec& klein_point, int source_index,
                              double boundary_margin) {
  validate_point({Model::Klein, klein_point}, boundary_margin);
  const double g2 = 1.0 - norm2(klein_point);
  const double g = std::sqrt(g2);
  PowerSite s;
  s.center = scaled(klein_point, 1.0 / (2.0 * g));
  s.squared_weight = norm2(klein_point) / (4.0 * g2) - 1.0 / g;
  s.source_index = source_index;
  return s;
}

int DelaunayComplex::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b),
                             [](const ComplexEdge& e, const std::pair<int, int>& k) {
                               return std::make_pair(e.a, e.b) < k;
                             });
  if (it == edges.end() || it->a != a || it->b != b) return -1;
  return static_cast<int>(it - edges.begin());
}

DelaunayComplex regular_triangulation(std::vector<PowerSite> sites) {
  const int N = static_cast<int>(sites.size());
  if (N == 0) throw DegenerateInput("no sites");
  const int n = static_cast<int>(sites[0].center.size());
  if (N < n + 1) throw DegenerateInput("need at least n+1 sites");
  std::vector<Vec> bases(N);
  std::vector<double> heights(N);
  {
    std::map<Vec, int> seen;
    for (int i = 0; i < N; ++i) {
      if (static_cast<int>(sites[i].center.size()) != n)
        throw DegenerateInput("inconsistent site dimensions");
      for (double c : sites[i].center)
        if (!std::isfinite(c)) throw DegenerateInput("non-finite site center");
      if (!std::isfinite(sites[i].squared_weight))
        throw DegenerateInput("non-finite site weight");
      auto [it, fresh] = seen.emplace(sites[i].center, i);
      if (!fresh) {
        std::ostringstream os;
        os << "duplicate site centers at indices " << it->second << " and " << i;
        throw DuplicateSite(os.str());
      }
      bases[i] = sites[i].center;
      heights[i] = lifted_height(sites[i]);
    }
  }

  DelaunayComplex out;
  out.dimension = n;
  out.sites = std::move(sites);

  std::vector<std::vector<int>> facets;
  if (N == n + 1) {
    if (static_cast<int>(affine_basis(bases, n).size()) < n + 1)
      throw DegenerateInput("sites are affinely dependent");
    std::vector<int> all(N);
    for (int i = 0; i < N; ++i) all[i] = i;
    facets.push_back(all);
  } else {
    const LiftedHull hull = build_lifted_hull(bases, heights);
    const LiftedOrientation pred(bases, heights);
    for (const HullFacet* f : hull.alive_facets()) {
      if (pred.orient_below(f->verts) > 0) {
        std::vector<int> v(f->verts);
        std::sort(v.begin(), v.end());
        facets.push_back(std::move(v));
      }
    }
    std::sort(facets.begin(), facets.end());
  }

  std::set<std::pair<int, int>> edge_set;
  for (const auto& fv : facets) {
    ComplexSimplex s;
    s.vertices = fv;
    s.dual_vertex = power_center(out.sites, fv, &s.condition);
    out.simplices.push_back(std::move(s));
    for (std::size_t i = 0; i < fv.size(); ++i)
      for (std::size_t j = i + 1; j < fv.size(); ++j)
        edge_set.emplace(fv[i], fv[j]);
  }
  for (const auto& [a, b] : edge_set) out.edges.push_back({a, b, true});

  out.edge_simplices.assign(out.edges.size(), {});
  for (int si = 0; si < static_cast<int>(out.simplices.size()); ++si) {
    const auto& fv = out.simplices[si].vertices;
    for (std::size_t i = 0; i < fv.size(); ++i)
      for (std::size_t j = i + 1; j < fv.size(); ++j)
        out.edge_simplices[out.find_edge(fv[i], fv[j])].push_back(si);
  }
  return out;
}

DualFace dual_face_of_edge(const DelaunayComplex& complex, int edge_index) {
  const ComplexEdge& e = complex.edges.at(edge_index);
  const int n = complex.dimension;
  DualFace face;
  for (int si : complex.edge_simplices[edge_index])
    face.vertices.push_back(complex.simplices[si].dual_vertex);

  // Recession directions d satisfy <d, s_b - s_a> = 0 and
  // <d, s_l - s_a> <= 0 for every other site l; candidates come from
  // subsets of n-2 additional active constraints.
  const Vec& sa = complex.sites[e.a].center;
  const Vec& sb = complex.sites[e.b].center;
  std::vector<Vec> others;
  for (int l = 0; l < static_cast<int>(complex.sites.size()); ++l)
    if (l != e.a && l != e.b) others.push_back(sub(complex.sites[l].center, sa));

  auto feasible = [&](const Vec& d) {
    for (const Vec& c : others) {
      const double len = norm(c);
      if (len == 0.0) continue;
      if (dot(d, c) > 1e-10 * len) return false;
    }
    return true;
  };
  auto try_candidate = [&](const Vec& d) {
    if (d.empty()) return;
    for (const Vec& r : face.rays)
      if (dist2(r, d) < 1e-18) return;
    if (feasible(d)) face.rays.push_back(d);
  };

  const Vec eq = sub(sb, sa);
  std::vector<int> cur;
  enumerate_subsets(
      static_cast<int>(others.size()), n - 2, cur,
      [&](const std::vector<int>& subset) {
        std::vector<double> m(static_cast<std::size_t>(n - 1) * n);
        for (int c = 0; c < n; ++c) m[c] = eq[c];
        for (int r = 0; r < n - 2; ++r)
          for (int c = 0; c < n; ++c) m[(r + 1) * n + c] = others[subset[r]][c];
        Vec d = nullspace_direction(std::move(m), n - 1, n);
        if (d.empty()) return;
        try_candidate(d);
        try_candidate(scaled(d, -1.0));
      });
  std::sort(face.rays.begin(), face.rays.end());
  return face;
}

std::string complex_to_json(const DelaunayComplex& complex) {
  using detail::fmt_g17;
  std::ostringstream os;
  os << "{\"dimension\":" << complex.dimension << ",\"sites\":[";
  for (std::size_t i = 0; i < complex.sites.size(); ++i) {
    const PowerSite& s = complex.sites[i];
    os << (i ? "," : "") << "{\"center\":[";
    for (std::size_t c = 0; c < s.center.size(); ++c)
      os << (c ? "," : "") << fmt_g17(s.center[c]);
    os << "],\"squared_weight\":" << fmt_g17(s.squared_weight)
       << ",\"source_index\":" << s.source_index << "}";
  }
  os << "],\"edges\":[";
  for (std::size_t i = 0; i < complex.edges.size(); ++i) {
    const ComplexEdge& e = complex.edges[i];
    os << (i ? "," : "") << "{\"a\":" << e.a << ",\"b\":" << e.b
       << ",\"kept\":" << (e.kept ? "true" : "false") << "}";
  }
  os << "],\"simplices\":[";
  for (std::size_t i = 0; i < complex.simplices.size(); ++i) {
    const ComplexSimplex& s = complex.simplices[i];
    os << (i ? "," : "") << "{\"vertices\":[";
    for (std::size_t c = 0; c < s.vertices.size(); ++c)
      os << (c ? "," : "") << s.vertices[c];
    os << "],\"dual_vertex\":[";
    for (std::size_t c = 0; c < s.dual_vertex.size(); ++c)
      os << (c ? "," : "") << fmt_g17(s.dual_vertex[c]);
    os << "],\"condition\":" << fmt_g17(s.condition)
       << ",\"kept\":" << (s.kept ? "true" : "false") << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace hyperdga

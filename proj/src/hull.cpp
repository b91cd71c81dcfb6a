#include "hyperdga/hull.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

int side_of(const LiftedOrientation& pred, const std::vector<int>& facet_verts,
            int query) {
  std::vector<int> rows(facet_verts);
  rows.push_back(query);
  return pred.orient(rows);
}

std::vector<int> ridge_key(const std::vector<int>& verts, int omit_slot) {
  std::vector<int> key;
  key.reserve(verts.size() - 1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (i != omit_slot) key.push_back(verts[i]);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

LiftedHull build_lifted_hull(const std::vector<Vec>& bases,
                             const std::vector<double>& heights) {
  const int N = static_cast<int>(bases.size());
  const int n = N ? static_cast<int>(bases[0].size()) : 0;
  const int D = n + 1;  // lifted dimension; facets have D vertices
  if (N < D + 1) throw DegenerateInput("need at least n+2 points for the lifted hull");

  const LiftedOrientation pred(bases, heights);

  // Initial simplex: n+1 base-affinely-independent points plus the first
  // other point. The height perturbation guarantees a nonzero orientation
  // for that set.
  const std::vector<int> indep = affine_basis(bases, n);
  if (static_cast<int>(indep.size()) < n + 1)
    throw DegenerateInput("sites are affinely dependent");
  std::vector<int> init(indep);
  std::vector<char> in_init(N, 0);
  for (int v : init) in_init[v] = 1;
  for (int k = 0; k < N && static_cast<int>(init.size()) < D + 1; ++k) {
    if (!in_init[k]) {
      init.push_back(k);
      in_init[k] = 1;
    }
  }

  LiftedHull hull;
  hull.base_dim = n;

  // One facet per omitted vertex of the initial simplex, oriented so the
  // omitted vertex sits on the negative side.
  for (int j = 0; j <= D; ++j) {
    HullFacet f;
    for (int i = 0; i <= D; ++i)
      if (i != j) f.verts.push_back(init[i]);
    const int s = side_of(pred, f.verts, init[j]);
    if (s == 0) throw DegenerateInput("degenerate initial simplex");
    if (s > 0) std::swap(f.verts[0], f.verts[1]);
    f.neighbors.assign(D, -1);
    hull.facets.push_back(std::move(f));
  }
  for (int a = 0; a <= D; ++a) {
    for (int slot = 0; slot < D; ++slot) {
      const int omitted = hull.facets[a].verts[slot];
      // The neighbor across this ridge is the facet that omits `omitted`.
      for (int b = 0; b <= D; ++b) {
        if (b == a) continue;
        if (std::find(hull.facets[b].verts.begin(), hull.facets[b].verts.end(),
                      omitted) == hull.facets[b].verts.end()) {
          hull.facets[a].neighbors[slot] = b;
          break;
        }
      }
    }
  }

  // Insert the remaining points in index order. Visibility is checked
  // against every live facet; the symbolic perturbation makes "on the
  // facet" impossible except for vertical walls, which count as invisible.
  for (int p = 0; p < N; ++p) {
    if (in_init[p]) continue;
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(hull.facets.size()); ++fi) {
      if (!hull.facets[fi].alive) continue;
      if (side_of(pred, hull.facets[fi].verts, p) > 0) visible.push_back(fi);
    }
    if (visible.empty()) continue;  // inside the hull (or on a wall): redundant
    std::vector<char> is_visible(hull.facets.size(), 0);
    for (int fi : visible) is_visible[fi] = 1;

    std::map<std::vector<int>, std::pair<int, int>> pending;  // ridge -> (facet, slot)
    for (int fi : visible) {
      // Copy: hull.facets may reallocate while new facets are appended.
      const HullFacet f = hull.facets[fi];
      for (int slot = 0; slot < D; ++slot) {
        const int g = f.neighbors[slot];
        if (g >= 0 && is_visible[g]) continue;  // interior ridge of the patch
        const int dropped = f.verts[slot];

        HullFacet nf;
        nf.verts = f.verts;
        nf.verts[slot] = p;
        int p_slot = slot;
        const int s = side_of(pred, nf.verts, dropped);
        if (s == 0) throw DegenerateInput("degenerate horizon facet");
        if (s > 0) {
          std::swap(nf.verts[0], nf.verts[1]);
          if (p_slot == 0)
            p_slot = 1;
          else if (p_slot == 1)
            p_slot = 0;
        }
        nf.neighbors.assign(D, -1);
        nf.neighbors[p_slot] = g;
        const int nf_id = static_cast<int>(hull.facets.size());
        // Rewire the surviving neighbor across the horizon ridge.
        for (int gs = 0; gs < D; ++gs) {
          if (hull.facets[g].neighbors[gs] == fi) {
            hull.facets[g].neighbors[gs] = nf_id;
            break;
          }
        }
        hull.facets.push_back(nf);
        is_visible.push_back(0);

        for (int slot2 = 0; slot2 < D; ++slot2) {
          if (slot2 == p_slot) continue;
          auto key = ridge_key(hull.facets[nf_id].verts, slot2);
          auto it = pending.find(key);
          if (it == pending.end()) {
            pending.emplace(std::move(key), std::make_pair(nf_id, slot2));
          } else {
            const auto [other_id, other_slot] = it->second;
            if (hull.facets[other_id].neighbors[other_slot] != -1)
              throw DegenerateInput("non-manifold horizon (pinched visible region)");
            hull.facets[nf_id].neighbors[slot2] = other_id;
            hull.facets[other_id].neighbors[other_slot] = nf_id;
            pending.erase(it);
          }
        }
      }
    }
    if (!pending.empty())
      throw DegenerateInput("open horizon ridge left after insertion");
    for (int fi : visible) hull.facets[fi].alive = false;
  }

  return hull;
}

}  // namespace hyperdga

#include "hyperdga/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperdga/errors.hpp"

namespace hyperdga {

PipelineResult score_sets(const std::vector<Vec>& a_klein,
                          const std::vector<Vec>& b_klein,
                          const PipelineOptions& opts, const std::string& model_in) {
  if (a_klein.empty() || b_klein.empty())
    throw EmptyInput("both point sets must be nonempty");
  const std::size_t n = a_klein[0].size();
  for (const auto* set : {&a_klein, &b_klein})
    for (const Vec& p : *set) {
      if (p.size() != n) throw InvalidPoint("inconsistent point dimensions");
      validate_point({Model::Klein, p}, opts.boundary_margin);
    }

  struct Entry {
    const Vec* p;
    int group;
    int id;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < a_klein.size(); ++i)
    entries.push_back({&a_klein[i], 0, static_cast<int>(i)});
  for (std::size_t i = 0; i < b_klein.size(); ++i)
    entries.push_back({&b_klein[i], 1, static_cast<int>(i)});

  // The Delaunay union requires pairwise-distinct points; the classical
  // metrics tolerate coincidences (identical sets score zero).
  if (opts.want_hyperdga || opts.keep_complex) {
    std::map<Vec, const Entry*> seen;
    for (const Entry& e : entries) {
      auto [it, fresh] = seen.emplace(*e.p, &e);
      if (!fresh) {
        std::ostringstream os;
        os << "duplicate point: " << (it->second->group ? "B[" : "A[") << it->second->id
           << "] and " << (e.group ? "B[" : "A[") << e.id << "] coincide exactly";
        throw DuplicateSite(os.str());
      }
    }
  }

  // Canonical site order: makes the symbolic tie-breaking independent of
  // which set is called A.
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return *x.p < *y.p; });

  PipelineResult result;
  result.report.model_in = model_in;
  result.report.n_points = {static_cast<int>(a_klein.size()),
                            static_cast<int>(b_klein.size())};

  if (opts.want_hyperdga || opts.keep_complex) {
    if (static_cast<int>(entries.size()) < static_cast<int>(n) + 1) {
      std::ostringstream os;
      os << "only " << entries.size() << " points in dimension " << n
         << ": the graph has no edges";
      throw EmptyGraph(os.str());
    }
    std::vector<PowerSite> sites;
    sites.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      PowerSite s = klein_to_power_site(*entries[i].p, static_cast<int>(i),
                                        opts.boundary_margin);
      sites.push_back(std::move(s));
      result.site_points.push_back(*entries[i].p);
      result.site_labels.push_back(entries[i].group);
      result.site_ids.push_back(entries[i].id);
    }
    PruneOptions popts;
    popts.eps_prune = opts.eps_prune;
    auto [pruned, prune_report] = prune_complex(regular_triangulation(std::move(sites)), popts);
    result.complex = std::move(pruned);
    result.prune_report = std::move(prune_report);
    result.report.pruned_edges =
        static_cast<int>(result.prune_report.removed_edges.size());
    if (opts.want_hyperdga) {
      result.report.edges = count_edges(*result.complex, result.site_labels);
      result.report.hyperdga = hyperdga_score(result.report.edges);
    }
  }

  if (opts.want_chamfer) result.report.chamfer = chamfer(a_klein, b_klein);

  if (opts.want_wasserstein) {
    if (a_klein.size() == b_klein.size()) {
      result.report.wasserstein = wasserstein(a_klein, b_klein);
    } else if (opts.wasserstein_required) {
      std::ostringstream os;
      os << "wasserstein requires |A| = |B|, got " << a_klein.size() << " and "
         << b_klein.size();
      throw CardinalityMismatch(os.str());
    }
  }
  return result;
}

}  // namespace hyperdga

#include "hyperdga/prune.hpp"

#include <cmath>
#include <sstream>

#include "hyperdga/detail/fmt.hpp"

namespace hyperdga {

namespace {

using detail::fmt_g17;

void dump_pairs(std::ostringstream& os, const std::vector<std::pair<int, int>>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << "[" << v[i].first << "," << v[i].second << "]";
  os << "]";
}

void dump_tuples(std::ostringstream& os, const std::vector<std::vector<int>>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < v[i].size(); ++j) os << (j ? "," : "") << v[i][j];
    os << "]";
  }
  os << "]";
}

}  // namespace

std::string PruneReport::to_json() const {
  std::ostringstream os;
  os << "{\"kept_edges\":";
  dump_pairs(os, kept_edges);
  os << ",\"removed_edges\":";
  dump_pairs(os, removed_edges);
  os << ",\"kept_simplices\":";
  dump_tuples(os, kept_simplices);
  os << ",\"removed_simplices\":";
  dump_tuples(os, removed_simplices);
  os << ",\"faces\":[";
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const FaceDecision& d = decisions[i];
    os << (i ? "," : "") << "{\"vertices\":[";
    for (std::size_t j = 0; j < d.vertices.size(); ++j)
      os << (j ? "," : "") << d.vertices[j];
    os << "],\"min_norm\":" << fmt_g17(d.min_norm) << ",\"method\":\"" << d.method
       << "\",\"kept\":" << (d.kept ? "true" : "false") << "}";
  }
  os << "]}";
  return os.str();
}

std::pair<DelaunayComplex, PruneReport> prune_complex(const DelaunayComplex& complex,
                                                      const PruneOptions& opts) {
  DelaunayComplex out = complex;
  PruneReport report;
  const double keep_below = 1.0 - opts.eps_prune;
  const bool planar = complex.dimension == 2 && !opts.force_qp;

  for (auto& simplex : out.simplices) {
    FaceDecision d;
    d.vertices = simplex.vertices;
    d.min_norm = norm(simplex.dual_vertex);
    d.method = opts.force_qp ? "qp" : "algebraic2d";
    if (opts.force_qp) {
      DualFace point_face;
      point_face.vertices.push_back(simplex.dual_vertex);
      d.min_norm = min_norm_point_qp(point_face, opts.qp).norm;
    }
    d.kept = d.min_norm < keep_below;
    simplex.kept = d.kept;
    (d.kept ? report.kept_simplices : report.removed_simplices).push_back(simplex.vertices);
    report.decisions.push_back(std::move(d));
  }

  for (int ei = 0; ei < static_cast<int>(out.edges.size()); ++ei) {
    const DualFace face = dual_face_of_edge(out, ei);
    FaceDecision d;
    d.vertices = {out.edges[ei].a, out.edges[ei].b};
    MinNormResult r;
    if (planar) {
      r = min_norm_point_2d(face);
      d.method = "algebraic2d";
    } else {
      r = min_norm_point_qp(face, opts.qp);
      d.method = "qp";
    }
    d.min_norm = r.norm;
    d.kept = d.min_norm < keep_below;
    out.edges[ei].kept = d.kept;
    const auto pair = std::make_pair(out.edges[ei].a, out.edges[ei].b);
    (d.kept ? report.kept_edges : report.removed_edges).push_back(pair);
    report.decisions.push_back(std::move(d));
  }
  return {std::move(out), std::move(report)};
}

}  // namespace hyperdga

#include "hyperdga/scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperdga/assignment.hpp"
#include "hyperdga/detail/fmt.hpp"
#include "hyperdga/errors.hpp"

namespace hyperdga {

using detail::fmt_g17;

std::string ScoreReport::to_json() const {
  auto opt = [](const std::optional<double>& v) {
    return v ? fmt_g17(*v) : std::string("null");
  };
  std::ostringstream os;
  os << "{\"hyperdga\":" << opt(hyperdga) << ",\"chamfer\":" << opt(chamfer)
     << ",\"wasserstein\":" << opt(wasserstein) << ",\"edges\":{\"total\":" << edges.total
     << ",\"heterogeneous\":" << edges.heterogeneous << "},\"pruned_edges\":" << pruned_edges
     << ",\"model_in\":\"" << model_in << "\",\"n_points\":[" << n_points[0] << ","
     << n_points[1] << "]}";
  return os.str();
}

EdgeCounts count_edges(const DelaunayComplex& pruned, const std::vector<int>& labels) {
  EdgeCounts c;
  for (const ComplexEdge& e : pruned.edges) {
    if (!e.kept) continue;
    ++c.total;
    const int la = labels.at(e.a), lb = labels.at(e.b);
    if (la != lb) {
      ++c.heterogeneous;
    } else if (la == 0 || la == 1) {
      ++c.homogeneous[la];
    }
  }
  if (c.total == 0) throw EmptyGraph("pruned complex has no edges");
  return c;
}

double hyperdga_score(const EdgeCounts& counts) {
  if (counts.total <= 0) throw EmptyGraph("no edges to classify");
  return 1.0 - static_cast<double>(counts.heterogeneous) / counts.total;
}

double chamfer(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) throw EmptyInput("chamfer needs two nonempty sets");
  // The two directed sums are accumulated separately so that swapping the
  // arguments swaps the final addends and nothing else: exact symmetry.
  double forward = 0.0, backward = 0.0;
  for (const Vec& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& q : b) best = std::min(best, klein_distance(p, q));
    forward += best * best;
  }
  for (const Vec& q : b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& p : a) best = std::min(best, klein_distance(p, q));
    backward += best * best;
  }
  return forward + backward;
}

double wasserstein(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) throw EmptyInput("wasserstein needs two nonempty sets");
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << "wasserstein needs equal cardinalities, got " << a.size() << " and " << b.size();
    throw CardinalityMismatch(os.str());
  }
  // Canonical argument order plus a sorted final sum make the result
  // bitwise symmetric even when several optimal matchings exist.
  const std::vector<Vec>* x = &a;
  const std::vector<Vec>* y = &b;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) std::swap(x, y);
  const int n = static_cast<int>(x->size());
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i][j] = klein_distance((*x)[i], (*y)[j]);
  const std::vector<int> match = solve_assignment(cost);
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i) terms[i] = cost[i][match[i]];
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

}  // namespace hyperdga

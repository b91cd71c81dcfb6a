#include "hyperdga/synthdata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

// Canonical double in [0, 1) from the top 53 bits; kept explicit so seeded
// streams are identical across standard libraries.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec mobius_add(const Vec& u, const Vec& v) {
  const double uv = dot(u, v), uu = norm2(u), vv = norm2(v);
  const double denom = 1.0 + 2.0 * uv + uu * vv;
  Vec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = ((1.0 + 2.0 * uv + vv) * u[i] + (1.0 - uu) * v[i]) / denom;
  return out;
}

}  // namespace

std::string BinaryTreeDataset::to_csv() const {
  std::ostringstream os;
  os << "id,parent_id,bits\n";
  for (int i = 0; i < node_count(); ++i) {
    os << i << "," << parent[i] << ",";
    for (std::uint8_t b : nodes[i]) os << (b ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

BinaryTreeDataset generate_tree(int depth, std::uint64_t seed) {
  if (depth < 2 || depth > 12) {
    std::ostringstream os;
    os << "tree depth " << depth << " outside supported range [2, 12]";
    throw DepthOutOfRange(os.str());
  }
  const int m = (1 << depth) - 1;
  BinaryTreeDataset ds;
  ds.depth = depth;
  ds.parent.assign(m, -1);
  for (int i = 1; i < m; ++i) {
    ds.parent[i] = (i - 1) / 2;
    ds.edges.emplace_back(ds.parent[i], i);
  }
  // Every node owns one coordinate position; its vector marks the
  // positions of its ancestor chain, so two vectors differ exactly on the
  // symmetric difference of the chains.
  std::vector<int> coord(m);
  for (int i = 0; i < m; ++i) coord[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(coord[i], coord[j]);
  }
  ds.nodes.assign(m, BitVector(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int a = i; a != -1; a = ds.parent[a]) ds.nodes[i][coord[a]] = 1;
  }
  return ds;
}

std::vector<BitVector> perturb(const BinaryTreeDataset& ds, double flip_probability,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BitVector> out = ds.nodes;
  for (auto& v : out) {
    for (auto& bit : v) {
      if (unit_double(rng) < flip_probability) bit ^= 1;
    }
  }
  return out;
}

std::vector<Vec> tree_layout(const BinaryTreeDataset& ds, const LayoutOptions& opts) {
  const int m = ds.node_count();
  const double step = std::tanh(opts.edge_length / 2.0);  // Poincare step radius
  std::vector<Vec> poincare(m);
  std::vector<double> lo(m), hi(m);
  poincare[0] = {0.0, 0.0};
  lo[0] = 0.0;
  hi[0] = 2.0 * std::numbers::pi;
  for (int i = 1; i < m; ++i) {
    const int p = ds.parent[i];
    const double mid = 0.5 * (lo[p] + hi[p]);
    const bool left = (i == 2 * p + 1);
    lo[i] = left ? lo[p] : mid;
    hi[i] = left ? mid : hi[p];
    const double theta = 0.5 * (lo[i] + hi[i]);
    const Vec dir{step * std::cos(theta), step * std::sin(theta)};
    poincare[i] = mobius_add(poincare[p], dir);
  }
  std::vector<Vec> klein(m);
  for (int i = 0; i < m; ++i) {
    klein[i] = poincare_to_klein({Model::Poincare, poincare[i]}, opts.boundary_margin).coords;
    validate_point({Model::Klein, klein[i]}, opts.boundary_margin);
  }
  return klein;
}

std::vector<Vec> vector_layout(const BinaryTreeDataset& ds,
                               const std::vector<BitVector>& vectors,
                               const LayoutOptions& opts) {
  if (vectors.size() != ds.nodes.size())
    throw LengthMismatch("vector count does not match the tree");
  const std::vector<Vec> base = tree_layout(ds, opts);
  std::vector<Vec> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double mismatch =
        (hamming(vectors[i], ds.nodes[i]) + opts.displacement_bias) /
        (ds.vector_length() + opts.displacement_bias);
    if (mismatch == 0.0) {
      out[i] = base[i];
      continue;
    }
    const double radius = norm(base[i]);
    Vec dir;
    if (radius > 0.0) {
      dir = scaled(base[i], 1.0 / radius);
    } else {
      dir = {-1.0, 0.0};  // the root's sector midpoint
    }
    const double rho = std::atanh(radius) + opts.displacement_scale * mismatch;
    out[i] = scaled(dir, std::tanh(rho));
    validate_point({Model::Klein, out[i]}, opts.boundary_margin);
  }
  return out;
}

int hamming(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) throw LengthMismatch("hamming on vectors of different length");
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]) ? 1 : 0;
  return d;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw LengthMismatch("pearson on sequences of different length");
  const int n = static_cast<int>(x.size());
  if (n < 2) throw ZeroVariance("pearson needs at least two samples");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw ZeroVariance("constant sequence in pearson");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> ranks_avg_ties(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
  std::vector<double> r(n);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * (i + j) + 1.0;
    for (int k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> rx = ranks_avg_ties(x);
  const std::vector<double> ry = ranks_avg_ties(y);
  return pearson(rx, ry);
}

}  // namespace hyperdga

#include "hyperdga/predicates.hpp"

#include <algorithm>
#include <cassert>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Determinant by Laplace expansion over column subsets (dynamic program).
// Row-major k x k matrix. O(k * 2^k), exact for exact T.
template <typename T>
T det_subset_dp(const std::vector<T>& m, int k) {
  const int full = 1 << k;
  std::vector<T> dp(full, T(0));
  dp[0] = T(1);
  for (int mask = 1; mask < full; ++mask) {
    const int row = __builtin_popcount(static_cast<unsigned>(mask)) - 1;
    T acc(0);
    int pos = 0;
    for (int c = 0; c < k; ++c) {
      if (!(mask & (1 << c))) continue;
      const T term = m[row * k + c] * dp[mask ^ (1 << c)];
      // Expansion along row `row`: sign (-1)^(row + pos).
      if ((row + pos) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
      ++pos;
    }
    dp[mask] = acc;
  }
  return dp[full - 1];
}

// Double determinant together with the permanent of absolute values, which
// bounds every intermediate quantity of the expansion. The rounding error
// of the computed determinant is below 2*k*u*perm; the caller uses a bound
// with extra slack.
void det_perm_dp(const std::vector<double>& m, int k, double* det, double* perm) {
  const int full = 1 << k;
  std::vector<double> dp(full, 0.0), pp(full, 0.0);
  dp[0] = 1.0;
  pp[0] = 1.0;
  for (int mask = 1; mask < full; ++mask) {
    const int row = __builtin_popcount(static_cast<unsigned>(mask)) - 1;
    double acc = 0.0, pacc = 0.0;
    int pos = 0;
    for (int c = 0; c < k; ++c) {
      if (!(mask & (1 << c))) continue;
      const double a = m[row * k + c];
      acc += ((row + pos) % 2 == 0 ? a : -a) * dp[mask ^ (1 << c)];
      pacc += std::abs(a) * pp[mask ^ (1 << c)];
      ++pos;
    }
    dp[mask] = acc;
    pp[mask] = pacc;
  }
  *det = dp[full - 1];
  *perm = pp[full - 1];
}

int rational_sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Exact sign of the determinant of a k x k matrix of doubles.
int exact_det_sign(const std::vector<double>& m, int k) {
  std::vector<Rational> rm(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rm[i] = Rational(m[i]);
  return rational_sign(det_subset_dp(rm, k));
}

// Filtered sign: +1/-1 when certain, 2 when the filter is inconclusive.
int filtered_det_sign(const std::vector<double>& m, int k) {
  double det = 0.0, perm = 0.0;
  det_perm_dp(m, k, &det, &perm);
  const double err = 8.0 * k * DBL_EPSILON * perm;
  if (det > err) return 1;
  if (det < -err) return -1;
  return 2;
}

int adaptive_det_sign(const std::vector<double>& m, int k) {
  const int s = filtered_det_sign(m, k);
  if (s != 2) return s;
  return exact_det_sign(m, k);
}

}  // namespace

LiftedOrientation::LiftedOrientation(const std::vector<Vec>& bases,
                                     const std::vector<double>& heights)
    : bases_(&bases), heights_(&heights) {
  if (bases.empty()) throw DegenerateInput("no sites");
  dim_ = static_cast<int>(bases[0].size());
  if (dim_ + 2 > 24) throw DegenerateInput("dimension too large for predicates");
}

int LiftedOrientation::orient(std::span<const int> sites) const {
  const int k = dim_ + 2;  // columns: base coords, height, homogeneous 1
  assert(static_cast<int>(sites.size()) == k);
  std::vector<double> m(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r) {
    const Vec& b = (*bases_)[sites[r]];
    for (int c = 0; c < dim_; ++c) m[r * k + c] = b[c];
    m[r * k + dim_] = (*heights_)[sites[r]];
    m[r * k + dim_ + 1] = 1.0;
  }
  const int s = filtered_det_sign(m, k);
  if (s != 2) return s;
  {
    std::vector<Rational> rm(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) rm[i] = Rational(m[i]);
    const int es = rational_sign(det_subset_dp(rm, k));
    if (es != 0) return es;
  }
  // Tie: walk the perturbation terms. Heights move down, so the term for
  // row r is -eps^(site+1) * cofactor(r, height column); the smallest site
  // index present dominates.
  std::vector<int> order(sites.begin(), sites.end());
  std::sort(order.begin(), order.end());
  for (int site : order) {
    int r = 0;
    while (sites[r] != site) ++r;
    // Minor: drop row r and the height column; the remaining columns are
    // the base coordinates plus the homogeneous one.
    const int km = k - 1;
    std::vector<double> minor(static_cast<std::size_t>(km) * km);
    int rr = 0;
    for (int r2 = 0; r2 < k; ++r2) {
      if (r2 == r) continue;
      const Vec& b = (*bases_)[sites[r2]];
      for (int c = 0; c < dim_; ++c) minor[rr * km + c] = b[c];
      minor[rr * km + dim_] = 1.0;
      ++rr;
    }
    const int ms = adaptive_det_sign(minor, km);
    if (ms != 0) {
      const int cof_sign = ((r + dim_) % 2 == 0) ? 1 : -1;
      return -cof_sign * ms;
    }
  }
  return 0;  // base points all in one hyperplane
}

int LiftedOrientation::orient_below(std::span<const int> sites) const {
  const int k = dim_ + 2;
  assert(static_cast<int>(sites.size()) == k - 1);
  std::vector<double> m(static_cast<std::size_t>(k) * k);
  for (int r = 0; r + 1 < k; ++r) {
    const Vec& b = (*bases_)[sites[r]];
    for (int c = 0; c < dim_; ++c) m[r * k + c] = b[c];
    m[r * k + dim_] = (*heights_)[sites[r]];
    m[r * k + dim_ + 1] = 1.0;
  }
  // Virtual last row: the direction (0,...,0,-1) at infinity. Height
  // perturbations of the finite rows cancel against its zero homogeneous
  // entry, so this sign needs no tie-breaking; 0 means a vertical facet.
  m[(k - 1) * k + dim_] = -1.0;
  return adaptive_det_sign(m, k);
}

std::vector<int> affine_basis(const std::vector<Vec>& points, int max_rank) {
  std::vector<int> chosen;
  if (points.empty()) return chosen;
  const int n = static_cast<int>(points[0].size());
  chosen.push_back(0);
  // Row-echelon basis of difference vectors, kept exact.
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivot_col;
  for (int k = 1; k < static_cast<int>(points.size()) &&
                  static_cast<int>(basis.size()) < std::min(max_rank, n);
       ++k) {
    std::vector<Rational> v(n);
    for (int c = 0; c < n; ++c) v[c] = Rational(points[k][c]) - Rational(points[0][c]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivot_col[b]] / basis[b][pivot_col[b]];
      if (f != 0) {
        for (int c = 0; c < n; ++c) v[c] -= f * basis[b][c];
      }
    }
    int pc = -1;
    for (int c = 0; c < n; ++c) {
      if (v[c] != 0) {
        pc = c;
        break;
      }
    }
    if (pc < 0) continue;
    basis.push_back(std::move(v));
    pivot_col.push_back(pc);
    chosen.push_back(k);
  }
  return chosen;
}

}  // namespace hyperdga

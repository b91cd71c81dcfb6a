#include "hyperdga/minnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperdga/errors.hpp"

namespace hyperdga {

namespace {

MinNormResult better(const MinNormResult& a, const MinNormResult& b) {
  return a.norm <= b.norm ? a : b;
}

MinNormResult project_origin_segment(const Vec& a, const Vec& b) {
  const Vec d = sub(b, a);
  const double dd = norm2(d);
  double t = dd > 0.0 ? -dot(a, d) / dd : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  Vec p = add(a, scaled(d, t));
  return {p, norm(p)};
}

MinNormResult project_origin_ray(const Vec& apex, const Vec& dir) {
  const double dd = norm2(dir);
  double t = dd > 0.0 ? -dot(apex, dir) / dd : 0.0;
  t = std::max(t, 0.0);
  Vec p = add(apex, scaled(dir, t));
  return {p, norm(p)};
}

}  // namespace

MinNormResult min_norm_point_2d(const DualFace& face) {
  if (face.vertices.empty()) throw EmptyInput("dual face has no vertices");
  MinNormResult best{face.vertices[0], norm(face.vertices[0])};
  for (const Vec& v : face.vertices) best = better(best, {v, norm(v)});
  for (std::size_t i = 0; i < face.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < face.vertices.size(); ++j)
      best = better(best, project_origin_segment(face.vertices[i], face.vertices[j]));
  for (const Vec& v : face.vertices)
    for (const Vec& r : face.rays) best = better(best, project_origin_ray(v, r));
  return best;
}

MinNormResult min_norm_point_qp(const DualFace& face, const MinNormQpOptions& opts) {
  if (face.vertices.empty()) throw EmptyInput("dual face has no vertices");
  const int n = static_cast<int>(face.vertices[0].size());

  // Generators: vertices first, then unit rays.
  std::vector<Vec> gens;
  std::vector<char> is_vertex;
  for (const Vec& v : face.vertices) {
    gens.push_back(v);
    is_vertex.push_back(1);
  }
  for (const Vec& r : face.rays) {
    const double len = norm(r);
    gens.push_back(len > 0.0 ? scaled(r, 1.0 / len) : r);
    is_vertex.push_back(0);
  }

  int start = 0;
  for (std::size_t i = 1; i < face.vertices.size(); ++i)
    if (norm2(face.vertices[i]) < norm2(face.vertices[start])) start = static_cast<int>(i);

  std::vector<int> active{start};
  std::vector<double> coeff{1.0};

  auto combine = [&](const std::vector<int>& idx, const std::vector<double>& c) {
    Vec x(n, 0.0);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (int d = 0; d < n; ++d) x[d] += c[i] * gens[idx[i]][d];
    return x;
  };

  // Affine subproblem on the active set: minimize |sum c_i g_i|^2 with the
  // vertex coefficients summing to 1, coefficients otherwise free. Solved
  // via the KKT system on the Gram matrix.
  auto solve_affine = [&](const std::vector<int>& idx, std::vector<double>* c) {
    const int m = static_cast<int>(idx.size());
    const int k = m + 1;
    std::vector<double> a(static_cast<std::size_t>(k) * (k + 1), 0.0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i * (k + 1) + j] = dot(gens[idx[i]], gens[idx[j]]);
      a[i * (k + 1) + m] = is_vertex[idx[i]] ? 1.0 : 0.0;
      a[m * (k + 1) + i] = is_vertex[idx[i]] ? 1.0 : 0.0;
    }
    a[m * (k + 1) + k] = 1.0;  // rhs of the sum-to-one row
    for (int col = 0; col < k; ++col) {
      int piv = col;
      for (int r = col + 1; r < k; ++r)
        if (std::abs(a[r * (k + 1) + col]) > std::abs(a[piv * (k + 1) + col])) piv = r;
      if (std::abs(a[piv * (k + 1) + col]) < 1e-14) return false;
      for (int cc = 0; cc <= k; ++cc) std::swap(a[col * (k + 1) + cc], a[piv * (k + 1) + cc]);
      for (int r = col + 1; r < k; ++r) {
        const double f = a[r * (k + 1) + col] / a[col * (k + 1) + col];
        for (int cc = col; cc <= k; ++cc) a[r * (k + 1) + cc] -= f * a[col * (k + 1) + cc];
      }
    }
    std::vector<double> sol(k);
    for (int r = k - 1; r >= 0; --r) {
      double s = a[r * (k + 1) + k];
      for (int cc = r + 1; cc < k; ++cc) s -= a[r * (k + 1) + cc] * sol[cc];
      sol[r] = s / a[r * (k + 1) + r];
    }
    c->assign(sol.begin(), sol.begin() + m);
    return true;
  };

  Vec x = combine(active, coeff);
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    // Optimality: <x, v - x> >= 0 for all vertices, <x, r> >= 0 for rays.
    const double xx = norm2(x);
    const double scale = std::max(1.0, xx);
    double worst = 0.0;
    int worst_gen = -1;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      const double viol = is_vertex[g] ? xx - dot(x, gens[g])
                                       : -dot(x, gens[g]) * std::sqrt(scale);
      if (viol > worst) {
        worst = viol;
        worst_gen = g;
      }
    }
    if (worst_gen < 0 || worst <= opts.gap_tolerance * scale)
      return {x, norm(x)};
    if (std::find(active.begin(), active.end(), worst_gen) != active.end()) {
      // Numerically stalled: the best improving generator is already in the
      // working set; x is optimal to working precision.
      return {x, norm(x)};
    }
    active.push_back(worst_gen);
    coeff.push_back(0.0);

    // Minor cycle: pull the affine optimum back into nonnegative weights,
    // dropping generators that hit zero.
    for (;;) {
      std::vector<double> target;
      if (!solve_affine(active, &target)) {
        active.pop_back();
        coeff.pop_back();
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (target[i] < 0.0 && coeff[i] > target[i]) {
          theta = std::min(theta, coeff[i] / (coeff[i] - target[i]));
        }
      }
      if (theta >= 1.0) {
        coeff = target;
        break;
      }
      for (std::size_t i = 0; i < active.size(); ++i)
        coeff[i] = (1.0 - theta) * coeff[i] + theta * target[i];
      // Remove the entries driven to (or past) zero.
      std::vector<int> na;
      std::vector<double> nc;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if ((target[i] < 0.0 && coeff[i] <= 1e-14) || coeff[i] < 0.0) continue;
        na.push_back(active[i]);
        nc.push_back(coeff[i]);
      }
      if (na.empty()) {
        na.push_back(active[0]);
        nc.push_back(is_vertex[active[0]] ? 1.0 : 0.0);
      }
      active = std::move(na);
      coeff = std::move(nc);
    }
    x = combine(active, coeff);
  }
  std::ostringstream os;
  os << "minimum-norm point did not converge in " << opts.max_iterations
     << " iterations (|x| = " << norm(x) << ", active set " << active.size() << ")";
  throw MaxIterations(os.str());
}

}  // namespace hyperdga

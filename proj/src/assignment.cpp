#include "hyperdga/assignment.hpp"

#include <limits>

#include "hyperdga/errors.hpp"

namespace hyperdga {

std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost,
                                  double* total_cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) throw EmptyInput("empty cost matrix");
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) throw CardinalityMismatch("cost matrix not square");

  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials/links per the classical formulation.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
  if (total_cost) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += cost[i][row_to_col[i]];
    *total_cost = s;
  }
  return row_to_col;
}

}  // namespace hyperdga

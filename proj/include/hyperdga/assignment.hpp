#pragma once

#include <vector>

namespace hyperdga {

/// Exact solution of the square assignment problem (shortest augmenting
/// paths, O(n^3)). cost is row-major n x n; returns the column assigned to
/// each row and writes the optimal total cost if requested.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost,
                                  double* total_cost = nullptr);

}  // namespace hyperdga

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ect {

struct Assignment {
  double cost = 0.0;
  std::vector<std::size_t> row_to_col;
};

// Minimum-cost perfect matching on an n x n row-major cost matrix
// (Hungarian method with potentials, O(n^3)).
Assignment min_cost_assignment(std::span<const double> cost, std::size_t n);

}  // namespace ect

#pragma once

#include <cstdint>
#include <vector>

#include "ect/complex.hpp"

namespace ect {

// Finite set of directions on S^{d-1}. For a (delta, C)-net built by
// delta_C_net, directions are C jittered copies of one base delta'-net and
// groups[j] lists the C copies of base point j (a cluster of diameter at most
// delta / 5).
struct DirectionNet {
  int dim = 0;
  double delta = 0.0;
  int multiplicity = 1;
  std::vector<Direction> directions;
  std::vector<std::vector<std::size_t>> groups;

  std::size_t size() const noexcept { return directions.size(); }
};

// Base-net covering radius used by the constructions: delta' = 2 delta / 3.
inline double net_covering_radius(double delta) noexcept { return 2.0 * delta / 3.0; }

// ceil((1 + 2 / delta')^d) with delta' = 2 delta / 3.
double delta_net_budget(int d, double delta) noexcept;

// Directions whose delta'-balls cover S^{d-1}: angular grid (d = 2),
// Fibonacci sphere with farthest-point repair (d = 3), random greedy cover
// (d >= 4). Throws BadRadius unless 0 < delta < pi/2.
DirectionNet delta_net(int d, double delta, std::uint64_t seed = 1);

// Union of C copies of delta_net, each point jittered by an angle below
// delta / 10 with a fixed-seed generator. Throws BadRadius or
// InvalidArgument (C < 1).
DirectionNet delta_C_net(int d, double delta, int C, std::uint64_t seed = 1);

// Number of net directions within geodesic distance `radius` of `center`.
std::size_t count_in_ball(const DirectionNet& net, const Direction& center, double radius);

}  // namespace ect

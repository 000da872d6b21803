#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ect/complex.hpp"

namespace ect {

using Rng = std::mt19937_64;

// Uniform on S^{d-1}: normalized independent standard Gaussians.
Direction random_direction(Rng& rng, int d);

// Uniform on the open cap {v : angle(v, center) < radius}, 0 < radius < pi/2.
Direction random_in_cap(Rng& rng, const Direction& center, double radius);

// Great-circle distance in radians.
double geodesic_distance(const Direction& a, const Direction& b);

double euclidean_distance(const Direction& a, const Direction& b);

// Haar-random orthogonal matrix, row-major d x d. With `proper` the
// determinant is +1.
std::vector<double> random_orthogonal(Rng& rng, int d, bool proper);

// Applies a row-major d x d matrix to a direction (re-normalized).
Direction apply(std::span<const double> matrix, const Direction& v);

}  // namespace ect

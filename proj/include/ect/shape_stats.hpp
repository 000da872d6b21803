#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ect/complex.hpp"
#include "ect/euler_curve.hpp"

namespace ect {

// Euler curves at n i.i.d. uniform directions.
struct CurveSample {
  std::vector<Direction> directions;
  std::vector<EulerCurve> curves;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// Directions from normalized Gaussians; a draw on which two vertices tie is
// replaced by the next draw. Throws InvalidArgument for n = 0.
CurveSample sample_pushforward(const SimplicialComplex& complex, std::size_t n, std::uint64_t seed,
                               unsigned threads = 1);

inline constexpr std::size_t kAssignmentCap = 512;

// Empirical Wasserstein-1 distance between two samples with ground metric
// lp_distance(., ., p, window): minimum average cost over bijections.
// Throws SizeMismatch or CostCapExceeded (n > 512).
double empirical_distance(const CurveSample& a, const CurveSample& b, double p, Window window);

// [-R, R] with R = max vertex norm of either complex + 1.
Window joint_window(const SimplicialComplex& a, const SimplicialComplex& b) noexcept;

struct InvarianceReport {
  double statistic = 0.0;
  std::vector<double> null_distances;  // sorted
  double q50 = 0.0;
  double q90 = 0.0;
  double q95 = 0.0;
  bool consistent = false;  // statistic <= q95
  CurveSample sample_a;     // the two samples behind the statistic
  CurveSample sample_b;

  const char* decision() const noexcept { return consistent ? "consistent" : "not consistent"; }
};

// Linear-interpolation quantile of sorted values, q in [0, 1].
double quantile(const std::vector<double>& sorted, double q);

// statistic = distance between samples of K1 and K2; null = `trials`
// distances between pairs of fresh K1 samples. All seeds derive from `seed`.
InvarianceReport invariance_test(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                 std::size_t n, std::uint64_t seed, std::size_t trials,
                                 unsigned threads = 1);

}  // namespace ect

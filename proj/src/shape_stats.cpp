#include "ect/shape_stats.hpp"

#include <algorithm>
#include <cmath>

#include "ect/assignment.hpp"
#include "ect/errors.hpp"
#include "ect/sphere.hpp"
#include "parallel.hpp"

namespace ect {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix(splitmix(seed) ^ (stream * 0xD1B54A32D192ED03ull));
}

}  // namespace

CurveSample sample_pushforward(const SimplicialComplex& complex, std::size_t n, std::uint64_t seed,
                               unsigned threads) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sample size must be positive");
  CurveSample s;
  s.n = n;
  s.seed = seed;
  Rng rng(seed);
  const double tol = tie_tolerance(complex);
  while (s.directions.size() < n) {
    Direction v = random_direction(rng, complex.ambient_dim());
    try {
      require_distinct_heights(heights(complex, v), tol);
    } catch (const TieError&) {
      continue;
    }
    s.directions.push_back(std::move(v));
  }
  s.curves.resize(n);
  detail::parallel_for(n, threads, [&](std::size_t i) { s.curves[i] = ect_curve(complex, s.directions[i]); });
  return s;
}

double empirical_distance(const CurveSample& a, const CurveSample& b, double p, Window window) {
  if (a.curves.size() != b.curves.size()) {
    throw Error(ErrorKind::SizeMismatch, "samples have different sizes");
  }
  const std::size_t n = a.curves.size();
  if (n > kAssignmentCap) {
    throw Error(ErrorKind::CostCapExceeded, "sample size exceeds the assignment cap of 512");
  }
  if (n == 0) return 0.0;
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = lp_distance(a.curves[i], b.curves[j], p, window);
  }
  return min_cost_assignment(cost, n).cost / static_cast<double>(n);
}

Window joint_window(const SimplicialComplex& a, const SimplicialComplex& b) noexcept {
  const double r = std::max(a.max_vertex_norm(), b.max_vertex_norm()) + 1.0;
  return {-r, r};
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw Error(ErrorKind::InvalidArgument, "quantile of an empty set");
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

InvarianceReport invariance_test(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                 std::size_t n, std::uint64_t seed, std::size_t trials,
                                 unsigned threads) {
  if (k1.ambient_dim() != k2.ambient_dim()) {
    throw Error(ErrorKind::InvalidArgument, "shapes live in different dimensions");
  }
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "at least one null trial is needed");
  const Window window = joint_window(k1, k2);
  InvarianceReport r;
  r.sample_a = sample_pushforward(k1, n, derive(seed, 0), threads);
  r.sample_b = sample_pushforward(k2, n, derive(seed, 1), threads);
  r.statistic = empirical_distance(r.sample_a, r.sample_b, 1.0, window);
  r.null_distances.resize(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = sample_pushforward(k1, n, derive(seed, 2 + 2 * t), threads);
    const auto y = sample_pushforward(k1, n, derive(seed, 3 + 2 * t), threads);
    r.null_distances[t] = empirical_distance(x, y, 1.0, window);
  }
  std::sort(r.null_distances.begin(), r.null_distances.end());
  r.q50 = quantile(r.null_distances, 0.50);
  r.q90 = quantile(r.null_distances, 0.90);
  r.q95 = quantile(r.null_distances, 0.95);
  r.consistent = r.statistic <= r.q95;
  return r;
}

}  // namespace ect

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ect/errors.hpp"
#include "ect/reconstruction.hpp"
#include "ect/sphere.hpp"

namespace ect {

namespace {

// Star of one vertex with the other vertices of each simplex listed, so the
// lower-star test only touches neighbours.
struct LocalStar {
  int vertex;
  std::vector<std::vector<int>> others;
  std::vector<int> sign;  // (-1)^dim
};

LocalStar local_star(const SimplicialComplex& complex, int x) {
  LocalStar ls{x, {}, {}};
  for (const auto& s : star(complex, x)) {
    std::vector<int> o;
    for (int u : s) {
      if (u != x) o.push_back(u);
    }
    ls.others.push_back(std::move(o));
    ls.sign.push_back(simplex_dim(s) % 2 == 0 ? 1 : -1);
  }
  return ls;
}

// chi of the lower star of `ls.vertex` under v; 0 when a neighbour ties with
// it, since such a direction is not generic.
int lower_star_chi(const SimplicialComplex& complex, const LocalStar& ls, const Direction& v,
                   double tol) {
  const double hx = v.dot(complex.vertex(ls.vertex));
  int chi = 0;
  for (std::size_t k = 0; k < ls.others.size(); ++k) {
    bool lower = true;
    for (int u : ls.others[k]) {
      const double hu = v.dot(complex.vertex(u));
      if (std::abs(hu - hx) <= tol) return 0;
      if (hu > hx) {
        lower = false;
        break;
      }
    }
    if (lower) chi += ls.sign[k];
  }
  return chi;
}

double cap_radius(double delta) {
  return std::min(delta, std::nextafter(0.5 * std::numbers::pi, 0.0));
}

}  // namespace

ObservabilityResult is_delta_observable(const SimplicialComplex& complex, int vertex, double delta,
                                        std::size_t samples, const ObservabilityOptions& options) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= complex.num_vertices() || samples == 0 ||
      !(delta > 0.0)) {
    return {};
  }
  const LocalStar ls = local_star(complex, vertex);
  const double tol = tie_tolerance(complex);
  const double radius = cap_radius(delta);
  const int d = complex.ambient_dim();
  Rng rng(options.seed);
  for (std::size_t c = 0; c < options.centers; ++c) {
    const Direction center = random_direction(rng, d);
    // A center must itself see the jump; cheap rejection before the cap.
    if (lower_star_chi(complex, ls, center, tol) == 0) continue;
    bool all = true;
    for (std::size_t s = 0; s < samples && all; ++s) {
      all = lower_star_chi(complex, ls, random_in_cap(rng, center, radius), tol) != 0;
    }
    if (all) return {true, center};
  }
  return {};
}

ClassReport class_check(const SimplicialComplex& complex, const ShapeClassParams& params,
                        std::size_t samples, std::uint64_t seed) {
  ClassReport report;
  samples = std::max<std::size_t>(samples, 1);
  const std::size_t n = complex.num_vertices();
  for (std::size_t x = 0; x < n; ++x) {
    const auto r = is_delta_observable(complex, static_cast<int>(x), params.delta, samples,
                                       {.centers = 4096, .seed = seed + x});
    if (!r.observable) {
      report.violations.push_back({ClassViolation::Kind::NotObservable, static_cast<int>(x),
                                   std::nullopt, 0,
                                   "vertex " + std::to_string(x) + " is not delta-observable"});
    }
  }

  std::vector<LocalStar> stars;
  stars.reserve(n);
  for (std::size_t x = 0; x < n; ++x) stars.push_back(local_star(complex, static_cast<int>(x)));
  const double tol = tie_tolerance(complex);
  const double radius = cap_radius(params.delta);
  Rng rng(seed ^ 0xC2B2AE3D27D4EB4Full);
  int worst = 0;
  std::optional<Direction> worst_center;
  for (std::size_t c = 0; c < samples; ++c) {
    const Direction center = random_direction(rng, params.d);
    std::set<int> critical;
    for (std::size_t s = 0; s < samples; ++s) {
      const Direction v = s == 0 ? center : random_in_cap(rng, center, radius);
      for (std::size_t x = 0; x < n; ++x) {
        if (lower_star_chi(complex, stars[x], v, tol) != 0) critical.insert(static_cast<int>(x));
      }
    }
    if (static_cast<int>(critical.size()) > worst) {
      worst = static_cast<int>(critical.size());
      worst_center = center;
    }
  }
  if (worst > params.k_delta) {
    report.violations.push_back({ClassViolation::Kind::TooManyCritical, -1, worst_center, worst,
                                 std::to_string(worst) + " critical vertices in one ball exceed k_delta = " +
                                     std::to_string(params.k_delta)});
  }
  return report;
}

}  // namespace ect

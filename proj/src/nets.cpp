#include "ect/nets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ect/errors.hpp"
#include "ect/kernels.hpp"
#include "ect/sphere.hpp"

namespace ect {

namespace {

void check_radius(double delta) {
  if (!(delta > 0.0) || !(delta < 0.5 * std::numbers::pi)) {
    throw Error(ErrorKind::BadRadius, "net radius must lie in (0, pi/2)");
  }
}

std::vector<double> fibonacci_sphere(std::size_t n) {
  std::vector<double> pts;
  pts.reserve(3 * n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    pts.push_back(r * std::cos(phi));
    pts.push_back(r * std::sin(phi));
    pts.push_back(z);
  }
  return pts;
}

// Farthest-point insertion: adds probes to `net` until every probe lies
// within `radius` of some net point. Both arrays are row-major, `dim` wide.
void repair_cover(std::vector<double>& net, std::span<const double> probes, int dim, double radius) {
  const std::size_t m = probes.size() / dim;
  std::vector<double> best(m, -2.0);
  std::vector<double> dots(m);
  auto absorb = [&](std::span<const double> point) {
    kernels::dot_rows(probes, dim, point, dots);
    for (std::size_t i = 0; i < m; ++i) best[i] = std::max(best[i], dots[i]);
  };
  for (std::size_t p = 0; p < net.size() / dim; ++p) {
    absorb(std::span<const double>(net).subspan(p * dim, dim));
  }
  const double threshold = std::cos(radius);
  for (;;) {
    const auto worst = std::min_element(best.begin(), best.end());
    if (worst == best.end() || *worst >= threshold) return;
    const std::size_t idx = static_cast<std::size_t>(worst - best.begin());
    const auto point = probes.subspan(idx * dim, dim);
    net.insert(net.end(), point.begin(), point.end());
    absorb(point);
  }
}

// Uniform grid with spacing at most `spacing`; every point of S^1 is within
// spacing / 2 of it.
std::vector<double> circle_grid(double spacing) {
  const double raw = 2.0 * std::numbers::pi / spacing;
  const auto n = static_cast<std::size_t>(std::max(3.0, std::ceil(raw - 1e-9)));
  std::vector<double> pts;
  pts.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back(std::cos(a));
    pts.push_back(std::sin(a));
  }
  return pts;
}

std::vector<double> sphere_cover(double radius) {
  const auto probes_n = static_cast<std::size_t>(
      std::clamp(std::ceil(700.0 / (radius * radius)), 2000.0, 400000.0));
  const double probe_gap = 2.5 / std::sqrt(static_cast<double>(probes_n));
  const double target = radius - probe_gap;
  const auto start_n = static_cast<std::size_t>(std::max(4.0, std::ceil(4.0 / (target * target))));
  std::vector<double> net = fibonacci_sphere(start_n);
  const std::vector<double> probes = fibonacci_sphere(probes_n);
  repair_cover(net, probes, 3, target);
  return net;
}

std::vector<double> random_cover(int d, double radius, std::uint64_t seed) {
  const double raw = 200.0 * std::pow(std::numbers::pi / radius, d - 1);
  const auto probes_n = static_cast<std::size_t>(std::clamp(raw, 2000.0, 200000.0));
  Rng rng(seed);
  std::vector<double> probes;
  probes.reserve(probes_n * d);
  for (std::size_t i = 0; i < probes_n; ++i) {
    const Direction v = random_direction(rng, d);
    probes.insert(probes.end(), v.components().begin(), v.components().end());
  }
  // Probe density is lower in high dimension; leave a tenth of the radius
  // as margin for the gaps between probes.
  std::vector<double> net(probes.begin(), probes.begin() + d);
  repair_cover(net, probes, d, 0.9 * radius);
  return net;
}

}  // namespace

double delta_net_budget(int d, double delta) noexcept {
  const double cover = net_covering_radius(delta);
  return std::ceil(std::pow(1.0 + 2.0 / cover, d) - 1e-9);
}

DirectionNet delta_net(int d, double delta, std::uint64_t seed) {
  check_radius(delta);
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "nets need d >= 2");
  const double cover = net_covering_radius(delta);
  std::vector<double> flat;
  if (d == 2) {
    flat = circle_grid(cover);
  } else if (d == 3) {
    flat = sphere_cover(cover);
  } else {
    flat = random_cover(d, cover, seed);
  }
  DirectionNet net;
  net.dim = d;
  net.delta = delta;
  net.multiplicity = 1;
  const std::size_t n = flat.size() / d;
  for (std::size_t i = 0; i < n; ++i) {
    net.directions.push_back(
        Direction::normalized(std::span<const double>(flat).subspan(i * d, d)));
    net.groups.push_back({i});
  }
  return net;
}

DirectionNet delta_C_net(int d, double delta, int C, std::uint64_t seed) {
  check_radius(delta);
  if (C < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity C must be at least 1");
  const DirectionNet base = delta_net(d, delta, seed);
  Rng rng(seed ^ 0x9E3779B97F4A7C15ull);
  const double jitter = delta / 10.0;

  DirectionNet net;
  net.dim = d;
  net.delta = delta;
  net.multiplicity = C;
  net.groups.assign(base.size(), {});
  net.directions.reserve(base.size() * static_cast<std::size_t>(C));
  for (int copy = 0; copy < C; ++copy) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      net.groups[j].push_back(net.directions.size());
      net.directions.push_back(random_in_cap(rng, base.directions[j], jitter));
    }
  }
  return net;
}

std::size_t count_in_ball(const DirectionNet& net, const Direction& center, double radius) {
  const double threshold = std::cos(radius);
  std::size_t count = 0;
  for (const auto& v : net.directions) {
    if (center.dot(v.components()) > threshold) ++count;
  }
  return count;
}

}  // namespace ect

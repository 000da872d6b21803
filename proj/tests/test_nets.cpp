#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "ect/errors.hpp"
#include "ect/nets.hpp"
#include "ect/sphere.hpp"

using namespace ect;

namespace {

// Smallest count of net points in random balls of radius delta.
std::size_t min_ball_count(const DirectionNet& net, double delta, int balls, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t worst = net.size();
  for (int i = 0; i < balls; ++i) {
    worst = std::min(worst, count_in_ball(net, random_direction(rng, net.dim), delta));
  }
  return worst;
}

}  // namespace

TEST_CASE("circle grid", "[nets]") {
  const auto net = delta_net(2, std::numbers::pi / 4);
  CHECK(net.size() == 12);
  CHECK(min_ball_count(net, std::numbers::pi / 4, 10000, 1) >= 1);
}

TEST_CASE("nets cover the sphere", "[nets]") {
  for (int d : {2, 3, 4}) {
    for (double delta : {0.3, 0.6, 1.0}) {
      if (d == 4 && delta < 0.5) continue;  // keep the greedy cover small
      INFO("d=" << d << " delta=" << delta);
      const auto net = delta_net(d, delta);
      CHECK(min_ball_count(net, delta, 10000, 7) >= 1);
      CHECK(static_cast<double>(net.size()) <= delta_net_budget(d, delta));
      // the covering radius is 2 delta / 3: check that too, against fresh probes
      CHECK(min_ball_count(net, net_covering_radius(delta) * 1.001, 10000, 8) >= 1);
    }
  }
}

TEST_CASE("coarser nets are not larger", "[nets]") {
  for (int d : {2, 3}) {
    std::size_t previous = ~std::size_t{0};
    for (double delta : {0.2, 0.4, 0.8, 1.2}) {
      const auto n = delta_net(d, delta).size();
      CHECK(n <= previous);
      previous = n;
    }
  }
}

TEST_CASE("(delta, C)-nets", "[nets]") {
  const double delta = std::numbers::pi / 6;
  const auto net = delta_C_net(2, delta, 5);
  CHECK(static_cast<double>(net.size()) <= 5 * std::pow(1 + 3 / delta, 2));
  CHECK(min_ball_count(net, delta, 10000, 3) >= 5);
  REQUIRE(net.groups.size() == net.size() / 5);
  for (const auto& g : net.groups) {
    CHECK(g.size() == 5);
    for (auto i : g) {
      for (auto j : g) CHECK(geodesic_distance(net.directions[i], net.directions[j]) <= delta / 5 + 1e-12);
    }
  }
  const auto net3 = delta_C_net(3, 0.4, 3);
  CHECK(min_ball_count(net3, 0.4, 10000, 4) >= 3);

  const auto one = delta_C_net(2, 0.5, 1);
  const auto base = delta_net(2, 0.5);
  REQUIRE(one.size() == base.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(geodesic_distance(one.directions[i], base.directions[i]) < 0.05);
  }
  // seeded: identical on repeat
  CHECK(delta_C_net(3, 0.4, 3).directions == net3.directions);
}

TEST_CASE("radius checks", "[nets]") {
  CHECK_THROWS_AS(delta_net(2, 0.0), Error);
  CHECK_THROWS_AS(delta_net(2, 2.0), Error);
  CHECK_THROWS_AS(delta_C_net(2, 0.5, 0), Error);
  Rng rng(1);
  CHECK_THROWS_AS(random_in_cap(rng, random_direction(rng, 3), 1.6), Error);
}

TEST_CASE("cap sampling stays in the cap", "[nets]") {
  Rng rng(12);
  for (int d : {2, 3, 5}) {
    const auto c = random_direction(rng, d);
    for (int i = 0; i < 2000; ++i) CHECK(geodesic_distance(c, random_in_cap(rng, c, 0.3)) < 0.3);
  }
}

TEST_CASE("random orthogonal matrices", "[nets]") {
  Rng rng(6);
  for (int d : {2, 3}) {
    for (bool proper : {true, false}) {
      const auto q = random_orthogonal(rng, d, proper);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          double dot = 0;
          for (int k = 0; k < d; ++k) dot += q[i * d + k] * q[j * d + k];
          CHECK(dot == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-12));
        }
      }
      double det = d == 2 ? q[0] * q[3] - q[1] * q[2]
                          : q[0] * (q[4] * q[8] - q[5] * q[7]) - q[1] * (q[3] * q[8] - q[5] * q[6]) +
                                q[2] * (q[3] * q[7] - q[4] * q[6]);
      if (proper) CHECK(det == Catch::Approx(1.0));
      CHECK(std::abs(det) == Catch::Approx(1.0));
    }
  }
}

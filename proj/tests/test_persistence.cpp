#include <catch_amalgamated.hpp>

#include "ect/persistence.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ect;
using ect::testing::dir;
using ect::testing::make;

TEST_CASE("lower-star filtration order", "[persistence]") {
  const auto seg = make(2, {0, 0, 1, 0}, {{0, 1}});
  const auto f = lower_star_filtration(seg, dir({1, 0}));
  REQUIRE(f.entries.size() == 3);
  CHECK(f.entries[0].simplex == Simplex{0});
  CHECK(f.entries[0].height == 0.0);
  CHECK(f.entries[1].simplex == Simplex{1});
  CHECK(f.entries[2].simplex == Simplex{0, 1});
  CHECK(f.entries[2].height == 1.0);

  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = ect::testing::random_complex(rng, 3);
    const auto g = lower_star_filtration(K, random_direction(rng, 3));
    std::map<Simplex, std::size_t> pos;
    for (std::size_t i = 0; i < g.entries.size(); ++i) pos[g.entries[i].simplex] = i;
    for (const auto& [s, i] : pos) {
      if (s.size() < 2) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + drop);
        CHECK(pos.at(face) < i);
      }
    }
  }
}

TEST_CASE("diagrams of small shapes", "[persistence]") {
  const auto seg = ect::testing::segment2d();
  const auto ds = pht(seg, dir({1, 0}));
  REQUIRE(ds.size() == 2);
  REQUIRE(ds[0].points.size() == 1);
  CHECK(ds[0].points[0].birth == Catch::Approx(-0.3));
  CHECK(ds[0].points[0].death == kInfinity);
  CHECK(ds[1].points.empty());

  const auto v = dir({0.2, 1});
  const auto hollow = make(2, {0, 0, 1, 0.1, 0.3, 1}, {{0, 1}, {1, 2}, {0, 2}});
  const auto h = heights(hollow, v);
  const auto dh = pht(hollow, v);
  CHECK(dh[0].points == std::vector<DiagramPoint>{{h[0], kInfinity, 0, 1}});
  CHECK(dh[1].points == std::vector<DiagramPoint>{{h[2], kInfinity, 1, 1}});
  CHECK(betti_curve(dh[1], 1).jumps() == std::vector<Jump>{{h[2], 1}});

  const auto two = make(2, {0, 0, 1, 0.2, 0.3, 1, 1.2, 1.3}, {{0, 1}, {2, 3}});
  const auto dt = pht(two, dir({0.3, 1}));
  CHECK(dt[0].total_multiplicity() == 2);
  CHECK(dt[0].essential_count() == 2);

  CHECK(betti_curve(PersistenceDiagram{}, 0).empty());
  CHECK(betti_curve(PersistenceDiagram{{{0.0, kInfinity, 0, 1}}}, 0).jumps() == std::vector<Jump>{{0.0, 1}});
}

TEST_CASE("Betti curves agree with rank and union-find oracles", "[persistence]") {
  Rng rng(8);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto K = ect::testing::random_complex(rng, d);
      const auto v = ect::testing::generic_direction(rng, K);
      const auto diagrams = pht(K, v);
      REQUIRE(static_cast<int>(diagrams.size()) == d);
      const auto h = heights(K, v);
      std::vector<double> ts(h.begin(), h.end());
      for (double x : h) ts.push_back(x + 1e-3);
      ts.push_back(*std::min_element(h.begin(), h.end()) - 1);
      for (double t : ts) {
        const auto betti = ect::testing::gf2_betti(K, h, t);
        for (int k = 0; k < d; ++k) {
          const int expect = k < static_cast<int>(betti.size()) ? betti[k] : 0;
          CHECK(betti_curve(diagrams[k], k).value(t) == expect);
        }
        CHECK(betti_curve(diagrams[0], 0).value(t) == ect::testing::component_count(K, h, t));
      }
    }
  }
}

TEST_CASE("bottleneck distance", "[persistence]") {
  const PersistenceDiagram a{{{0.0, 2.0, 0, 1}}};
  const PersistenceDiagram b{{{0.5, 2.0, 0, 1}}};
  CHECK(bottleneck_distance(a, a) == 0.0);
  CHECK(bottleneck_distance(a, PersistenceDiagram{}) == Catch::Approx(1.0));
  CHECK(bottleneck_distance(a, b) == Catch::Approx(0.5));
  CHECK(bottleneck_distance(b, a) == Catch::Approx(0.5));

  const PersistenceDiagram e1{{{0.0, kInfinity, 0, 1}}};
  const PersistenceDiagram e2{{{0.25, kInfinity, 0, 1}}};
  CHECK(bottleneck_distance(e1, e2) == Catch::Approx(0.25));
  CHECK(bottleneck_distance(e1, PersistenceDiagram{}) == kInfinity);

  // multiplicities count as separate points
  const PersistenceDiagram m2{{{0.0, 4.0, 0, 2}}};
  const PersistenceDiagram m1{{{0.0, 4.0, 0, 1}}};
  CHECK(bottleneck_distance(m2, m1) == Catch::Approx(2.0));
  // different degrees never match
  const PersistenceDiagram d1{{{0.0, 2.0, 1, 1}}};
  CHECK(bottleneck_distance(a, d1) == Catch::Approx(1.0));
}

TEST_CASE("stability under direction change", "[persistence]") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = ect::testing::random_complex(rng, 2);
    const auto v1 = random_direction(rng, 2);
    const auto v2 = random_direction(rng, 2);
    const auto a = pht(K, v1);
    const auto b = pht(K, v2);
    double dv = 0;
    for (int k = 0; k < 2; ++k) dv += (v1[k] - v2[k]) * (v1[k] - v2[k]);
    for (int k = 0; k < 2; ++k) CHECK(bottleneck_distance(a[k], b[k]) <= K.max_vertex_norm() * std::sqrt(dv) + 1e-9);
  }
}

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ect/errors.hpp"
#include "ect/reconstruction.hpp"
#include "fixtures.hpp"

using namespace ect;
using ect::testing::dir;
using ect::testing::make;

namespace {

constexpr double kPi = std::numbers::pi;

// Max over truth of the distance to the nearest detected point, and the same
// the other way round.
std::pair<double, double> set_distance(const SimplicialComplex& truth,
                                       const std::vector<std::vector<double>>& found) {
  auto dist = [](std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  };
  double missed = 0, spurious = 0;
  for (std::size_t i = 0; i < truth.num_vertices(); ++i) {
    double best = INFINITY;
    for (const auto& f : found) best = std::min(best, dist(truth.vertex(i), f));
    missed = std::max(missed, best);
  }
  for (const auto& f : found) {
    double best = INFINITY;
    for (std::size_t i = 0; i < truth.num_vertices(); ++i) best = std::min(best, dist(truth.vertex(i), f));
    spurious = std::max(spurious, best);
  }
  return {missed, spurious};
}

}  // namespace

TEST_CASE("vertex count bound", "[reconstruction]") {
  CHECK(vertex_count_bound({2, kPi / 2, 1}) == 2);
  CHECK(vertex_count_bound({2, kPi / 3, 2}) == 8);
  CHECK(vertex_count_bound({2, 0.3, 3}) <= vertex_count_bound({2, 0.3, 4}));
  CHECK(vertex_count_bound({3, 0.3, 2}) >= vertex_count_bound({3, 0.6, 2}));
}

TEST_CASE("required C", "[reconstruction]") {
  CHECK(required_C({2, 0.5, 4}) == 5);
  CHECK(required_C({3, 0.5, 2}) == 5);
  CHECK(required_C({2, 0.5, 1}) == 2);
}

TEST_CASE("direction budget", "[reconstruction]") {
  const auto b = direction_budget({2, kPi / 6, 4}, 3);
  CHECK(b.first_term == 227);
  CHECK(b.strata_bound == 7);
  CHECK(b.total() == 234);
  CHECK(direction_budget({2, kPi / 6, 5}, 3).first_term > b.first_term);
  CHECK(direction_budget({2, kPi / 8, 4}, 3).first_term > b.first_term);
  CHECK(direction_budget({2, kPi / 6, 4}, 4).strata_bound == 1 + 6 + 15);
}

TEST_CASE("parameter validation", "[reconstruction]") {
  CHECK_THROWS_AS((ShapeClassParams{2, 0.0, 1}.validate()), Error);
  CHECK_THROWS_AS((ShapeClassParams{2, 2.0, 1}.validate()), Error);
  CHECK_THROWS_AS((ShapeClassParams{2, 0.5, 0}.validate()), Error);
  CHECK_THROWS_AS((ShapeClassParams{0, 0.5, 1}.validate()), Error);
  CHECK_NOTHROW((ShapeClassParams{3, 0.5, 2}.validate()));
}

TEST_CASE("a point is recovered from its hyperplanes", "[reconstruction]") {
  const std::vector<double> p{0.3, -0.7, 0.2};
  const ShapeClassParams params{3, 0.4, 1};
  const int C = required_C(params);
  Rng rng(5);
  const auto c = random_direction(rng, 3);
  EctSample sample;
  std::vector<std::size_t> group;
  for (int i = 0; i < C; ++i) {
    const auto v = random_in_cap(rng, c, 0.05);
    sample.entries.emplace_back(v, EulerCurve::from_jumps({{v.dot(p), 1}}));
    group.push_back(i);
  }
  const auto found = detect_vertices(sample, {group}, params);
  REQUIRE(found.size() == 1);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(found[0][k] - p[k]) < 1e-9);

  // too few directions in the group
  group.pop_back();
  try {
    detect_vertices(sample, {group}, params);
    FAIL("expected NetTooSparse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NetTooSparse);
  }
}

TEST_CASE("detection respects the system cap", "[reconstruction]") {
  const auto K = ect::testing::hollow_triangle();
  const ShapeClassParams params{2, 0.5, 3};
  const auto net = delta_C_net(2, params.delta, required_C(params));
  const auto sample = sample_ect(K, net.directions);
  try {
    detect_vertices(sample, net.groups, params, {.max_systems = 3});
    FAIL("expected CostExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CostExceeded);
  }
  const auto found = detect_vertices(sample, net.groups, params, {.threads = 4});
  const auto [missed, spurious] = set_distance(K, found);
  CHECK(missed < 1e-6);
  CHECK(spurious < 1e-6);
  // the cap-based fallback finds the same points
  const auto by_caps = detect_vertices(sample, {}, params);
  REQUIRE(by_caps.size() == found.size());
}

TEST_CASE("observability", "[reconstruction]") {
  // regular pentagon: interior angle 3 pi / 5, a vertex is the minimum on an
  // arc of length 2 pi / 5, which holds a ball of radius pi / 5 and no more
  std::vector<double> c;
  for (int i = 0; i < 5; ++i) {
    c.push_back(std::cos(0.1 + 2 * kPi * i / 5));
    c.push_back(std::sin(0.1 + 2 * kPi * i / 5));
  }
  const auto pentagon = make(2, c, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  for (int x = 0; x < 5; ++x) {
    const auto r = is_delta_observable(pentagon, x, 0.55, 200);
    CHECK(r.observable);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(is_delta_observable(pentagon, x, 0.75, 200).observable);
  }

  const auto point = make(3, {0.2, 0.1, -0.3}, {{0}});
  CHECK(is_delta_observable(point, 0, 1.5, 200).observable);

  const auto path = make(2, {0, 0, 1, 0, 2, 0}, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_delta_observable(path, 1, 0.1, 50).observable);
  CHECK(is_delta_observable(path, 0, 0.5, 100).observable);
  CHECK_FALSE(is_delta_observable(path, 7, 0.5, 100).observable);
}

TEST_CASE("class check", "[reconstruction]") {
  CHECK(class_check(make(2, {0.4, 0.4}, {{0}}), {2, 1.2, 1}, 100).in_class());
  const auto tri = ect::testing::filled_triangle();
  CHECK(class_check(tri, {2, 0.5, 3}, 200).in_class());
  const auto r = class_check(tri, {2, 0.5, 1}, 200);
  REQUIRE_FALSE(r.in_class());
  CHECK(r.violations[0].kind == ClassViolation::Kind::TooManyCritical);
  CHECK(r.violations[0].critical_count == 2);
  CHECK(r.violations[0].center.has_value());

  const auto path = make(2, {0, 0, 1, 0, 2, 0.3}, {{0, 1}, {1, 2}});
  const auto p = class_check(make(2, {0, 0, 1, 0, 2, 0}, {{0, 1}, {1, 2}}), {2, 0.5, 3}, 100);
  REQUIRE_FALSE(p.in_class());
  CHECK(p.violations[0].kind == ClassViolation::Kind::NotObservable);
  CHECK(p.violations[0].vertex == 1);
  CHECK(class_check(path, {2, 0.1, 3}, 100).in_class());
}

TEST_CASE("oracles", "[reconstruction]") {
  const auto K = ect::testing::hollow_triangle();
  ComplexOracle oracle(K);
  CHECK(oracle.dim() == 2);
  const auto v = dir({0.3, 1});
  CHECK(oracle.query(v) == ect_curve(K, v));
  CHECK(oracle.query(dir({0, 1})) == sublevel_curve(K, dir({0, 1})));
  CHECK(oracle.query_count() == 2);
  const auto log = oracle.transcript();
  REQUIRE(log.size() == 2);

  ReplayOracle replay(log);
  CHECK(replay.query(v) == ect_curve(K, v));
  try {
    replay.query(dir({1, 1}));
    FAIL("expected UnknownDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownDirection);
  }
}

TEST_CASE("round trip on small shapes", "[reconstruction]") {
  auto fixtures = ect::testing::reconstruction_fixtures_2d();
  for (auto& f : ect::testing::reconstruction_fixtures_3d()) {
    if (f.name == "point" || f.name == "tetrahedron boundary") fixtures.push_back(f);
  }
  for (const auto& f : fixtures) {
    INFO(f.name << " d=" << f.params.d);
    ComplexOracle oracle(f.complex);
    const auto rec = reconstruct(oracle, f.params, {.seed = 3, .threads = 2});
    REQUIRE(rec.report.vertices.size() == f.complex.num_vertices());
    const auto [missed, spurious] = set_distance(f.complex, rec.report.vertices);
    CHECK(missed < 1e-6);
    CHECK(spurious < 1e-6);
    CHECK(rec.report.total_queries == oracle.query_count());
    CHECK(rec.report.total_queries == rec.report.net_size + rec.report.strata.size());
    CHECK(rec.report.total_queries <= rec.report.budget.total());
    const auto h = held_out_error(rec.ect, f.complex, 100, 11);
    CHECK(h.deltas_match);
    CHECK(h.max_l1 < 1e-6);
    CHECK(h.max_threshold_error < 1e-6);
    CHECK(h.directions == 100);
  }
}

TEST_CASE("single point reconstruction", "[reconstruction]") {
  ComplexOracle oracle(make(2, {0.25, -0.5}, {{0}}));
  const auto rec = reconstruct(oracle, {2, 0.5, 1});
  REQUIRE(rec.report.vertices.size() == 1);
  CHECK(rec.ect.arrangement().num_hyperplanes() == 0);
  CHECK(rec.report.strata.size() == 1);
}

TEST_CASE("wall directions agree from both sides", "[reconstruction]") {
  const auto K = ect::testing::filled_triangle();
  ComplexOracle oracle(K);
  const auto rec = reconstruct(oracle, {2, 0.5, 3}, {.seed = 5});
  const auto& arr = rec.ect.arrangement();
  for (std::size_t k = 0; k < arr.num_hyperplanes(); ++k) {
    const auto n = arr.normal(k);
    for (double s : {1.0, -1.0}) {
      const auto w = dir({-s * n[1], s * n[0]});
      INFO("wall " << k << " side " << s);
      CHECK(same_curve(rec.ect.answer(w), sublevel_curve(K, w), 1e-9));
      CHECK(same_curve(rec.ect.answer_from_opposite_side(w), sublevel_curve(K, w), 1e-9));
    }
  }
}

TEST_CASE("replayed transcript gives the same reconstruction", "[reconstruction]") {
  const auto K = ect::testing::quad_with_tail();
  const ShapeClassParams params{2, 0.4, 5};
  ComplexOracle oracle(K);
  const auto a = reconstruct(oracle, params, {.seed = 2});
  ReplayOracle replay(oracle.transcript());
  const auto b = reconstruct(replay, params, {.seed = 2});
  CHECK(a.report.vertices == b.report.vertices);
  CHECK(a.report.total_queries == b.report.total_queries);

  ReplayOracle other(oracle.transcript());
  CHECK_THROWS_AS(reconstruct(other, params, {.seed = 99}), Error);
}

TEST_CASE("reconstruction errors", "[reconstruction]") {
  ComplexOracle one_d(make(1, {0.5}, {{0}}));
  CHECK_THROWS_AS(reconstruct(one_d, {1, 0.5, 1}), Error);
}

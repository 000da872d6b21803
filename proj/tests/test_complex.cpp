#include <catch_amalgamated.hpp>

#include <cmath>

#include "ect/complex.hpp"
#include "ect/errors.hpp"
#include "fixtures.hpp"

using namespace ect;
using ect::testing::dir;
using ect::testing::make;

namespace {

bool has(const ValidationReport& r, Violation::Kind kind) {
  for (const auto& v : r.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validation of the triangle and its failures", "[complex]") {
  const SimplicialComplex tri(2, {0, 0, 1, 0, 0, 1}, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(validate(tri).ok());
  CHECK(tri.euler_characteristic() == 1);

  const SimplicialComplex missing(2, {0, 0, 1, 0}, {{0, 1}});
  const auto r = validate(missing);
  CHECK(has(r, Violation::Kind::MissingFace));
  for (const auto& v : r.violations) {
    if (v.kind == Violation::Kind::MissingFace) CHECK(std::string(to_string(v.kind)) == "missing face");
  }

  const SimplicialComplex degenerate(2, {0.5, 0.5, 0.5, 0.5}, {{0}, {1}, {0, 1}});
  CHECK(has(validate(degenerate), Violation::Kind::AffinelyDependent));

  CHECK(has(validate(SimplicialComplex(2, {0, 0}, {{0}, {0, 3}})), Violation::Kind::IndexOutOfRange));
  CHECK(has(validate(SimplicialComplex(2, {0, 0, 1, 1}, {{0}, {1}, {1, 0}})), Violation::Kind::UnsortedSimplex));
  CHECK(has(validate(SimplicialComplex(2, {0, 0, 1, 1}, {{0}, {1}, {1}})), Violation::Kind::DuplicateSimplex));
  CHECK(has(validate(SimplicialComplex(2, {0, 0, 1, 1}, {{0}})), Violation::Kind::MissingVertex));
  CHECK(has(validate(SimplicialComplex(2, {0, NAN}, {{0}})), Violation::Kind::NonFiniteCoordinate));
  CHECK(has(validate(SimplicialComplex(1, {0, 1, 2}, {{0}, {1}, {2}, {0, 1, 2}})),
            Violation::Kind::AffinelyDependent));
}

TEST_CASE("closure under faces", "[complex]") {
  const auto tri = make(2, {0, 0, 1, 0, 0, 1}, {{2, 0, 1}});
  CHECK(tri.num_simplices() == 7);
  CHECK(validate(tri).ok());
  const auto tet = make(3, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}, {{0, 1, 2, 3}});
  CHECK(tet.num_simplices() == 15);
  CHECK(tet.euler_characteristic() == 1);
  CHECK(ect::testing::tetrahedron_boundary().euler_characteristic() == 2);
}

TEST_CASE("heights", "[complex]") {
  const auto seg = make(2, {0, 0, 1, 0}, {{0, 1}});
  const auto h = heights(seg, dir({1, 0}));
  CHECK(h == std::vector<double>{0, 1});

  const auto tri = make(2, {0, 0, 1, 0, 0, 1}, {{0, 1, 2}});
  const auto hd = heights(tri, dir({1, 1}));
  CHECK(hd[0] == 0.0);
  CHECK(hd[1] == Catch::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(hd[2] == Catch::Approx(std::sqrt(0.5)).epsilon(1e-15));

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto K = ect::testing::random_complex(rng, 3);
    const auto v = random_direction(rng, 3);
    const auto a = heights(K, v);
    const auto b = heights(K, -v);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] == -a[i]);
  }
  CHECK_THROWS_AS(heights(tri, dir({1, 0, 0})), Error);
}

TEST_CASE("lower stars and their Euler characteristics", "[complex]") {
  const auto seg = make(2, {0, 0, 1, 0}, {{0, 1}});
  CHECK(lower_star(seg, 1, dir({1, 0})) == SimplexSet{{1}, {0, 1}});
  CHECK(lower_star(seg, 0, dir({1, 0})) == SimplexSet{{0}});
  CHECK(euler_char(lower_star(seg, 1, dir({1, 0}))) == 0);

  // heights x < y < z with x = 0, y = 1, z = 2
  const auto tri = make(2, {0, 0, 1, 0.1, 0.3, 1}, {{0, 1, 2}});
  const auto v = dir({0.2, 1});
  const auto lz = lower_star(tri, 2, v);
  CHECK(lz == SimplexSet{{2}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(euler_char(lz) == 0);
  CHECK(euler_char({}) == 0);
}

TEST_CASE("ties are reported with the offending pair", "[complex]") {
  const auto tri = make(2, {0, 0, 1, 0, 0, 1}, {{0, 1, 2}});
  try {
    lower_star(tri, 0, dir({1, 1}));
    FAIL("expected a tie");
  } catch (const TieError& e) {
    CHECK(e.kind() == ErrorKind::Tie);
    CHECK(e.first() == 1);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("directions", "[complex]") {
  CHECK_THROWS_AS(Direction::normalized(std::vector<double>{0, 0}), Error);
  CHECK_THROWS_AS(Direction::from_unit(std::vector<double>{1, 1}), Error);
  const auto v = Direction::normalized(std::vector<double>{3, 4});
  CHECK(v[0] == Catch::Approx(0.6));
  CHECK((-v)[1] == Catch::Approx(-0.8));
}

TEST_CASE("linear images and translations", "[complex]") {
  const auto tri = ect::testing::filled_triangle();
  const std::vector<double> rot{0, -1, 1, 0};
  const auto r = tri.linear_image(rot);
  CHECK(r.vertex(1)[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(r.vertex(1)[1] == Catch::Approx(1.0));
  CHECK(r.simplices() == tri.simplices());
  const std::vector<double> off{1, 2};
  const auto t = tri.translated(off);
  CHECK(t.vertex(0)[0] == 1.0);
  CHECK(t.vertex(0)[1] == 2.0);
  CHECK(t.diameter() == Catch::Approx(tri.diameter()));
}

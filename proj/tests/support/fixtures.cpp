#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "ect/errors.hpp"

namespace ect::testing {

SimplicialComplex make(int d, std::vector<double> coords, const std::vector<Simplex>& gens) {
  return SimplicialComplex::from_generators(d, std::move(coords), gens);
}

Direction dir(std::vector<double> raw) { return Direction::normalized(raw); }

namespace {

// All faces of a Kuhn triangulation of the grid with `n[k]` points per axis.
struct Grid {
  int d;
  std::vector<int> n;
  std::vector<Simplex> tops;

  int index(const std::vector<int>& p) const {
    int idx = 0;
    for (int k = d - 1; k >= 0; --k) idx = idx * n[k] + p[k];
    return idx;
  }
  int count() const { return std::accumulate(n.begin(), n.end(), 1, std::multiplies<>()); }
};

Grid kuhn(int d, std::vector<int> n) {
  Grid g{d, std::move(n), {}};
  std::vector<int> cell(d, 0);
  for (;;) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> p = cell;
      Simplex s{g.index(p)};
      for (int axis : perm) {
        ++p[axis];
        s.push_back(g.index(p));
      }
      std::sort(s.begin(), s.end());
      g.tops.push_back(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    int k = 0;
    while (k < d && ++cell[k] == g.n[k] - 1) cell[k++] = 0;
    if (k == d) break;
  }
  return g;
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, int d) {
  const Grid g = d == 2 ? kuhn(2, {3, 4}) : kuhn(3, {2, 2, 2});
  std::uniform_real_distribution<double> jitter(-0.12, 0.12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> coords(static_cast<std::size_t>(g.count()) * d);
  const int total = g.count();
  for (int i = 0; i < total; ++i) {
    int rest = i;
    for (int k = 0; k < d; ++k) {
      const int c = rest % g.n[k];
      rest /= g.n[k];
      coords[i * d + k] = c - 0.5 * (g.n[k] - 1) + jitter(rng);
    }
  }

  std::set<Simplex> faces;
  for (const auto& t : g.tops) {
    const std::uint32_t full = (1u << t.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (mask & (1u << i)) f.push_back(t[i]);
      }
      faces.insert(f);
    }
  }

  std::vector<Simplex> gens;
  while (gens.empty()) {
    for (const auto& f : faces) {
      const double p = simplex_dim(f) == d ? 0.4 : (simplex_dim(f) == 1 ? 0.08 : 0.05);
      if (unit(rng) < p) gens.push_back(f);
    }
  }

  // Keep only used vertices.
  std::map<int, int> remap;
  for (const auto& s : gens) {
    for (int v : s) remap.emplace(v, 0);
  }
  std::vector<double> kept;
  int next = 0;
  for (auto& [old, fresh] : remap) {
    fresh = next++;
    kept.insert(kept.end(), coords.begin() + old * d, coords.begin() + (old + 1) * d);
  }
  for (auto& s : gens) {
    for (int& v : s) v = remap[v];
  }
  return SimplicialComplex::from_generators(d, std::move(kept), gens);
}

Direction generic_direction(Rng& rng, const SimplicialComplex& complex) {
  const double tol = tie_tolerance(complex);
  for (;;) {
    Direction v = random_direction(rng, complex.ambient_dim());
    try {
      require_distinct_heights(heights(complex, v), tol);
      return v;
    } catch (const TieError&) {
    }
  }
}

SimplicialComplex filled_triangle() { return make(2, {0, 0, 1, 0, 0.2, 0.9}, {{0, 1, 2}}); }

SimplicialComplex hollow_triangle() { return make(2, {0, 0, 1, 0, 0.2, 0.9}, {{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex segment2d() { return make(2, {-0.3, 0.1, 0.8, 0.5}, {{0, 1}}); }

SimplicialComplex tetrahedron_boundary() {
  return make(3, {0.1, 0.0, -0.2, 1.0, 0.1, 0.0, 0.2, 0.9, 0.1, 0.3, 0.2, 1.1},
              {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex solid_tetrahedron() {
  return make(3, {0.1, 0.0, -0.2, 1.0, 0.1, 0.0, 0.2, 0.9, 0.1, 0.3, 0.2, 1.1}, {{0, 1, 2, 3}});
}

SimplicialComplex quad_with_tail() {
  return make(2, {0.0, 0.0, 1.1, 0.1, 1.3, 0.9, 0.2, 0.7, 2.0, 1.4},
              {{0, 1, 3}, {1, 2, 3}, {2, 4}});
}

namespace {

Fixture fixture(std::string name, SimplicialComplex k, double delta) {
  const int d = k.ambient_dim();
  const int kd = static_cast<int>(k.num_vertices());
  return {std::move(name), std::move(k), ShapeClassParams{d, delta, kd}};
}

std::vector<double> regular_polygon(int n, double r, double phase) {
  std::vector<double> c;
  for (int i = 0; i < n; ++i) {
    const double a = phase + 2.0 * 3.14159265358979323846 * i / n;
    c.push_back(r * std::cos(a));
    c.push_back(r * std::sin(a));
  }
  return c;
}

}  // namespace

std::vector<Fixture> reconstruction_fixtures_2d() {
  std::vector<Fixture> f;
  f.push_back(fixture("point", make(2, {0.3, -0.4}, {{0}}), 0.5));
  f.push_back(fixture("segment", segment2d(), 0.5));
  f.push_back(fixture("filled triangle", filled_triangle(), 0.5));
  f.push_back(fixture("hollow triangle", hollow_triangle(), 0.5));
  f.push_back(fixture("filled square", make(2, {0, 0, 1, 0, 1, 1, 0, 1}, {{0, 1, 2}, {0, 2, 3}}), 0.5));
  f.push_back(fixture("regular pentagon", make(2, regular_polygon(5, 1.0, 0.1),
                                               {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}),
                      0.5));
  f.push_back(fixture("hollow square", make(2, {0, 0, 1, 0, 1, 1, 0, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0.5));
  f.push_back(fixture("two segments", make(2, {0, 0, 1, 0.2, 0.3, 1, 1.2, 1.3}, {{0, 1}, {2, 3}}), 0.5));
  f.push_back(fixture("point and segment", make(2, {-1, 0.5, 0.2, 0.1, 0.9, -0.6}, {{0}, {1, 2}}), 0.5));
  f.push_back(fixture("three points", make(2, {0.1, 0.2, -0.7, 0.4, 0.5, -0.9}, {{0}, {1}, {2}}), 0.5));
  f.push_back(fixture("v path", make(2, {-1, 1, 0, 0, 1.2, 0.8}, {{0, 1}, {1, 2}}), 0.5));
  f.push_back(fixture("irregular quadrilateral",
                      make(2, {0.0, 0.0, 1.1, 0.1, 1.3, 0.9, 0.2, 0.7}, {{0, 1, 3}, {1, 2, 3}}), 0.4));
  f.push_back(fixture("triangle with tail", quad_with_tail(), 0.4));
  return f;
}

std::vector<Fixture> reconstruction_fixtures_3d() {
  std::vector<Fixture> f;
  f.push_back(fixture("point", make(3, {0.2, -0.1, 0.4}, {{0}}), 0.4));
  f.push_back(fixture("segment", make(3, {0, 0, 0, 0.7, 0.4, 0.9}, {{0, 1}}), 0.4));
  f.push_back(fixture("triangle", make(3, {0, 0, 0, 1, 0.1, 0.2, 0.1, 0.9, 0.3}, {{0, 1, 2}}), 0.4));
  f.push_back(fixture("tetrahedron boundary", tetrahedron_boundary(), 0.4));
  f.push_back(fixture("solid tetrahedron", solid_tetrahedron(), 0.4));
  f.push_back(fixture("four points",
                      make(3, {0.1, 0.2, 0.3, -0.5, 0.7, 0.2, 0.9, -0.3, 0.4, 0.2, 0.1, -0.8},
                           {{0}, {1}, {2}, {3}}),
                      0.4));
  return f;
}

std::vector<Fixture> generic_fixtures() {
  std::vector<Fixture> f;
  f.push_back(fixture("filled triangle", filled_triangle(), 0.5));
  f.push_back(fixture("hollow triangle", hollow_triangle(), 0.5));
  f.push_back(fixture("triangle with tail", quad_with_tail(), 0.4));
  f.push_back(fixture("tetrahedron boundary", tetrahedron_boundary(), 0.4));
  f.push_back(fixture("hollow triangle 3d",
                      make(3, {0, 0, 0, 1, 0.1, 0.2, 0.1, 0.9, 0.3}, {{0, 1}, {1, 2}, {0, 2}}), 0.4));
  f.push_back(fixture("two points 3d", make(3, {0.1, 0.2, 0.3, -0.5, 0.7, 0.2}, {{0}, {1}}), 0.4));
  f.push_back(fixture("four points 3d",
                      make(3, {0.1, 0.2, 0.3, -0.5, 0.7, 0.2, 0.9, -0.3, 0.4, 0.2, 0.1, -0.8},
                           {{0}, {1}, {2}, {3}}),
                      0.4));
  return f;
}

}  // namespace ect::testing

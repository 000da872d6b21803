#pragma once

#include <string>
#include <vector>

#include "ect/complex.hpp"
#include "ect/reconstruction.hpp"
#include "ect/sphere.hpp"

namespace ect::testing {

SimplicialComplex make(int d, std::vector<double> coords, const std::vector<Simplex>& gens);

// Random embedded complex: a subset of the cells of a jittered Kuhn
// triangulation (3 x 4 grid in 2D, 2 x 2 x 2 in 3D) plus some loose edges and
// vertices, closed under faces, unused vertices dropped.
SimplicialComplex random_complex(Rng& rng, int d);

// Uniform direction with pairwise distinct vertex heights.
Direction generic_direction(Rng& rng, const SimplicialComplex& complex);

Direction dir(std::vector<double> raw);

struct Fixture {
  std::string name;
  SimplicialComplex complex;
  ShapeClassParams params;
};

// In-class shapes with their parameters (k_delta = number of vertices).
std::vector<Fixture> reconstruction_fixtures_2d();
std::vector<Fixture> reconstruction_fixtures_3d();

// Shapes satisfying the genericity hypothesis: vertex set in general position
// and no symmetry, with at least d - 1 Euler critical values expected.
std::vector<Fixture> generic_fixtures();

// Named small shapes.
SimplicialComplex filled_triangle();    // (0,0), (1,0), (0.2,0.9)
SimplicialComplex hollow_triangle();
SimplicialComplex segment2d();
SimplicialComplex tetrahedron_boundary();
SimplicialComplex solid_tetrahedron();
SimplicialComplex quad_with_tail();     // asymmetric planar shape

}  // namespace ect::testing

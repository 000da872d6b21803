#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ect {

// Strictly increasing vertex indices; orientation is not tracked.
using Simplex = std::vector<int>;

// A set of simplices of some host complex, not necessarily face-closed
// (stars and lower stars).
using SimplexSet = std::vector<Simplex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

// Unit vector in R^d.
class Direction {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  Direction() = default;

  // Normalizes `raw`; throws InvalidArgument for zero or non-finite input.
  static Direction normalized(std::span<const double> raw);
  // Accepts an already unit vector; throws InvalidArgument if | |v| - 1 | > kUnitTolerance.
  static Direction from_unit(std::span<const double> unit);

  std::size_t dim() const noexcept { return c_.size(); }
  std::span<const double> components() const noexcept { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }

  double dot(std::span<const double> x) const;
  Direction operator-() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::vector<double> c_;
};

// Finite geometric simplicial complex in R^d. Immutable after construction;
// the constructor only checks shapes, validate() checks the complex invariants.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int ambient_dim, std::vector<double> coordinates,
                    std::vector<Simplex> simplices);

  // Builds the complex generated by `generators`: every nonempty face of every
  // generator, plus a 0-simplex per vertex. Generators need not be sorted.
  static SimplicialComplex from_generators(int ambient_dim,
                                           std::vector<double> coordinates,
                                           const std::vector<Simplex>& generators);

  int ambient_dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return n_; }
  std::span<const double> coordinates() const noexcept { return coords_; }
  std::span<const double> vertex(std::size_t i) const;
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t num_simplices() const noexcept { return simplices_.size(); }

  int top_dimension() const noexcept;
  // Alternating simplex count.
  int euler_characteristic() const noexcept;
  // Largest pairwise vertex distance (0 for fewer than two vertices).
  double diameter() const noexcept { return diameter_; }
  double max_vertex_norm() const noexcept { return max_norm_; }

  // Image under x -> A x, A given row-major d x d.
  SimplicialComplex linear_image(std::span<const double> matrix) const;
  SimplicialComplex translated(std::span<const double> offset) const;

 private:
  int dim_ = 0;
  std::size_t n_ = 0;
  std::vector<double> coords_;
  std::vector<Simplex> simplices_;
  double diameter_ = 0.0;
  double max_norm_ = 0.0;
};

struct Violation {
  enum class Kind {
    IndexOutOfRange,
    UnsortedSimplex,
    EmptySimplex,
    DuplicateSimplex,
    MissingFace,
    MissingVertex,
    DuplicateVertex,
    NonFiniteCoordinate,
    AffinelyDependent,
  };
  Kind kind;
  std::string message;
  Simplex simplex;  // offending simplex, or {vertex} for vertex-level issues
};

const char* to_string(Violation::Kind kind) noexcept;

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Relative tolerance for the affine-independence check: the smallest singular
// value of the edge matrix must exceed kAffineTolerance * diameter.
inline constexpr double kAffineTolerance = 1e-9;
// Relative tolerance for height ties: |h_i - h_j| <= kTieTolerance * diameter.
inline constexpr double kTieTolerance = 1e-10;

ValidationReport validate(const SimplicialComplex& complex);

// One height per vertex: <v, x_i> in double precision.
std::vector<double> heights(const SimplicialComplex& complex, const Direction& v);

double tie_tolerance(const SimplicialComplex& complex) noexcept;

// Throws TieError naming the closest pair when two heights are within `tol`.
void require_distinct_heights(std::span<const double> heights, double tol);

// Simplices containing `vertex` whose maximum-height vertex is `vertex`.
// Throws TieError if the direction is not generic for the vertex set.
SimplexSet lower_star(const SimplicialComplex& complex, int vertex, const Direction& v);

// Simplices containing `vertex`.
SimplexSet star(const SimplicialComplex& complex, int vertex);

// Alternating count sum (-1)^dim; 0 for the empty set.
int euler_char(const SimplexSet& set) noexcept;

// For each simplex, the index of its highest vertex under `h` (ties broken
// toward the larger index).
std::vector<int> simplex_owners(const SimplicialComplex& complex,
                                std::span<const double> h);

}  // namespace ect

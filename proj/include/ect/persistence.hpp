#pragma once

#include <limits>
#include <vector>

#include "ect/complex.hpp"
#include "ect/euler_curve.hpp"

namespace ect {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct FiltrationEntry {
  Simplex simplex;
  double height;  // max vertex height of the simplex
};

// Lower-star filtration: sorted by entry height, then dimension, then
// lexicographically by vertex tuple. Faces precede cofaces.
struct Filtration {
  int ambient_dim = 0;
  std::vector<FiltrationEntry> entries;
};

struct DiagramPoint {
  double birth;
  double death;  // kInfinity for essential classes
  int degree;
  int multiplicity;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

// Finite multiset of off-diagonal points; identical points are merged into
// one entry with a multiplicity. Points are kept sorted.
struct PersistenceDiagram {
  std::vector<DiagramPoint> points;

  int total_multiplicity() const noexcept;
  int essential_count() const noexcept;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

// Merges identical (birth, death, degree) entries and sorts.
PersistenceDiagram make_diagram(std::vector<DiagramPoint> points);

Filtration lower_star_filtration(const SimplicialComplex& complex, const Direction& v);

// Boundary-matrix reduction over Z/2. Returns diagrams for degrees
// 0 .. ambient_dim - 1; zero-persistence pairs are dropped.
std::vector<PersistenceDiagram> persistence_diagrams(const Filtration& filtration);

// Convenience: diagrams of the lower-star filtration in direction v.
std::vector<PersistenceDiagram> pht(const SimplicialComplex& complex, const Direction& v);

// t -> #{points of `degree` with birth <= t < death}, as a step function.
EulerCurve betti_curve(const PersistenceDiagram& diagram, int degree);

// Bottleneck distance with l-infinity ground cost; unmatched points go to the
// diagonal. Points only match points of the same degree; a mismatch in the
// number of essential classes of some degree gives +infinity.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace ect

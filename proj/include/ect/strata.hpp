#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ect/complex.hpp"
#include "ect/euler_curve.hpp"
#include "ect/persistence.hpp"

namespace ect {

// Hyperplane division of S^{d-1} by a vertex set: for every pair i < j the
// great sphere {v : <v, x_i> = <v, x_j>}.
class HyperplaneArrangement {
 public:
  HyperplaneArrangement() = default;

  int dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return points_.size() / (dim_ ? dim_ : 1); }
  std::size_t num_hyperplanes() const noexcept { return pairs_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> vertex(std::size_t i) const;
  const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
  // Unit normal of hyperplane k: direction of x_i - x_j.
  std::span<const double> normal(std::size_t k) const;
  // Unnormalized x_i - x_j, row-major.
  std::span<const double> differences() const noexcept { return diffs_; }
  double diameter() const noexcept { return diameter_; }

  // max(diameter, max |x_i|), or 1 when every point is the origin.
  double tolerance_scale() const noexcept { return scale_; }
  // wall_rel * scale (1e-9 unless overridden).
  double default_wall_tolerance() const noexcept { return wall_rel_ * scale_; }
  // match_rel * scale (1e-7 unless overridden).
  double default_match_tolerance() const noexcept { return match_rel_ * scale_; }
  void set_relative_tolerances(double wall_rel, double match_rel) noexcept {
    wall_rel_ = wall_rel;
    match_rel_ = match_rel;
  }

 private:
  friend HyperplaneArrangement arrangement(int dim, std::vector<double> points);

  int dim_ = 0;
  std::vector<double> points_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<double> normals_;
  std::vector<double> diffs_;
  double diameter_ = 0.0;
  double scale_ = 1.0;
  double wall_rel_ = 1e-9;
  double match_rel_ = 1e-7;
};

// Throws DuplicateVertex when two points coincide.
HyperplaneArrangement arrangement(int dim, std::vector<double> points);
HyperplaneArrangement arrangement(const SimplicialComplex& complex);

// Sign vector over vertex pairs (i < j): sign(<v, x_i - x_j>), with 0 when
// the magnitude is at most the wall tolerance.
struct StratumLabel {
  std::vector<std::int8_t> signs;

  bool on_wall() const noexcept;
  StratumLabel operator-() const;

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
  friend auto operator<=>(const StratumLabel&, const StratumLabel&) = default;
};

StratumLabel stratum_label(const HyperplaneArrangement& arr, const Direction& v, double wall_tol);
StratumLabel stratum_label(const HyperplaneArrangement& arr, const Direction& v);

// Equal sign vectors. Throws WallError if either label touches a wall.
bool same_stratum(const HyperplaneArrangement& arr, const Direction& v, const Direction& w);

// Moves each jump from height <v, x> to <w, x>, x being the vertex whose
// v-height matches the threshold within `match_tol`. Does not check strata;
// thresholds that land within `merge_tol` of each other are merged.
EulerCurve relabel_curve(const EulerCurve& curve, const Direction& v, const Direction& w,
                         const HyperplaneArrangement& arr, double match_tol, double merge_tol);

// Euler curve at w deduced from the curve at v, for v, w in one stratum.
// Throws WallError, StratumError or UnmatchedJump.
EulerCurve transfer_curve(const EulerCurve& curve_v, const Direction& v, const Direction& w,
                          const HyperplaneArrangement& arr);
EulerCurve transfer_curve(const EulerCurve& curve_v, const Direction& v, const Direction& w,
                          const HyperplaneArrangement& arr, double match_tol);

// Persistence diagram at w deduced from the diagram at v (births and deaths
// mapped independently, infinity fixed).
PersistenceDiagram transfer_diagram(const PersistenceDiagram& diagram_v, const Direction& v,
                                    const Direction& w, const HyperplaneArrangement& arr);
PersistenceDiagram transfer_diagram(const PersistenceDiagram& diagram_v, const Direction& v,
                                    const Direction& w, const HyperplaneArrangement& arr,
                                    double match_tol);

enum class StrataMode { Exact2d, Sampled };

struct StratumRepresentative {
  StratumLabel label;
  Direction direction;
};

struct StrataOptions {
  std::uint64_t seed = 1;
  // Sampling stops after stall_factor * (labels found) consecutive draws
  // without a new label.
  std::size_t stall_factor = 50;
  std::size_t max_samples = 20'000'000;
};

// Exact2d: arc midpoints between consecutive wall points of S^1 (complete).
// Sampled: uniform draws deduplicated by label (complete only with high
// probability). Throws ModeError for Exact2d with d != 2.
std::vector<StratumRepresentative> strata_representatives(const HyperplaneArrangement& arr,
                                                          StrataMode mode,
                                                          const StrataOptions& options = {});

// sum_{j=0}^{d} C(n, j), saturating at UINT64_MAX.
std::uint64_t strata_count_bound(std::uint64_t hyperplanes, int d) noexcept;

// d * (e n / d)^d.
double strata_count_estimate(std::uint64_t hyperplanes, int d) noexcept;

}  // namespace ect

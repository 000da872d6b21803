#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ect/complex.hpp"

namespace ect {

struct Jump {
  double threshold;
  int delta;

  friend bool operator==(const Jump&, const Jump&) = default;
};

// Right-continuous integer step function: value(t) = sum of deltas with
// threshold <= t, zero below every threshold. Thresholds are strictly
// increasing and no stored delta is zero.
class EulerCurve {
 public:
  EulerCurve() = default;

  // Sorts, merges exactly equal thresholds and drops zero deltas.
  static EulerCurve from_jumps(std::vector<Jump> raw);
  // As from_jumps, but also merges thresholds closer than `tol` (the merged
  // jump sits at the first threshold of the run).
  static EulerCurve from_jumps_merging(std::vector<Jump> raw, double tol);

  const std::vector<Jump>& jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }
  bool empty() const noexcept { return jumps_.empty(); }
  int terminal_value() const noexcept { return terminal_; }

  int value(double t) const noexcept;

  friend bool operator==(const EulerCurve&, const EulerCurve&) = default;

 private:
  std::vector<Jump> jumps_;
  int terminal_ = 0;
};

int curve_value(const EulerCurve& curve, double t) noexcept;

// Same deltas in the same order and every threshold within `tol`.
bool same_curve(const EulerCurve& a, const EulerCurve& b, double tol) noexcept;

// Euler curve from the lower-star decomposition: a jump at each vertex height
// with delta = chi(lower star). Throws TieError for non-generic directions.
EulerCurve ect_curve(const SimplicialComplex& complex, const Direction& v);

// Euler curve by per-threshold global recount of the sublevel subcomplex
// {sigma : max vertex height <= t}. Independent of ect_curve; throws TieError.
EulerCurve brute_force_curve(const SimplicialComplex& complex, const Direction& v);

// Euler curve valid for every direction, including those on walls: simplices
// are grouped by the exact value of their maximum vertex height.
EulerCurve sublevel_curve(const SimplicialComplex& complex, const Direction& v);

// chi(K ∩ {x : <v, x> = t}) from simplices crossing the level. Throws
// NonGenericSlice when t is within the tie tolerance of a vertex height.
int slice_euler_char(const SimplicialComplex& complex, const Direction& v, double t);

// The same quantity via ECT(v, t) + ECT(-v, -t) - chi(K).
int slice_euler_char_from_curves(const SimplicialComplex& complex, const Direction& v,
                                 double t);

struct Window {
  double lo;
  double hi;
};

// [-R, R] with R = max vertex norm + 1.
Window default_window(const SimplicialComplex& complex) noexcept;

// (integral over the window of |a - b|^p)^(1/p), exact for step functions.
double lp_distance(const EulerCurve& a, const EulerCurve& b, double p, Window window);

enum class Provenance { Direct, Oracle, Transferred };

const char* to_string(Provenance p) noexcept;

struct EctSample {
  std::vector<std::pair<Direction, EulerCurve>> entries;
  Provenance provenance = Provenance::Direct;

  // Pairwise angular separation greater than 1e-12.
  bool directions_distinct() const;
};

// ect_curve for each direction, fanned out over `threads` workers.
EctSample sample_ect(const SimplicialComplex& complex, std::span<const Direction> directions,
                     unsigned threads = 1);

}  // namespace ect

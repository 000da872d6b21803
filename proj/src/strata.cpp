#include "ect/strata.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "ect/errors.hpp"
#include "ect/kernels.hpp"
#include "ect/sphere.hpp"

namespace ect {

std::span<const double> HyperplaneArrangement::vertex(std::size_t i) const {
  return std::span<const double>(points_).subspan(i * dim_, dim_);
}

std::span<const double> HyperplaneArrangement::normal(std::size_t k) const {
  return std::span<const double>(normals_).subspan(k * dim_, dim_);
}

HyperplaneArrangement arrangement(int dim, std::vector<double> points) {
  if (dim < 1 || points.size() % static_cast<std::size_t>(dim) != 0) {
    throw Error(ErrorKind::InvalidArgument, "points must be a list of d-tuples");
  }
  HyperplaneArrangement arr;
  arr.dim_ = dim;
  arr.points_ = std::move(points);
  const int n = static_cast<int>(arr.points_.size() / dim);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double norm2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double diff = arr.points_[i * dim + k] - arr.points_[j * dim + k];
        norm2 += diff * diff;
      }
      arr.diameter_ = std::max(arr.diameter_, std::sqrt(norm2));
    }
  }
  // Heights v.x carry rounding proportional to |x|, so the tolerance scale
  // must not vanish for a single point.
  arr.scale_ = arr.diameter_;
  for (int i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (int k = 0; k < dim; ++k) norm2 += arr.points_[i * dim + k] * arr.points_[i * dim + k];
    arr.scale_ = std::max(arr.scale_, std::sqrt(norm2));
  }
  if (arr.scale_ == 0.0) arr.scale_ = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double norm2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double diff = arr.points_[i * dim + k] - arr.points_[j * dim + k];
        arr.diffs_.push_back(diff);
        norm2 += diff * diff;
      }
      const double norm = std::sqrt(norm2);
      if (norm == 0.0 || norm <= 1e-12 * arr.diameter_) {
        throw Error(ErrorKind::DuplicateVertex,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      for (int k = 0; k < dim; ++k) {
        arr.normals_.push_back(arr.diffs_[arr.diffs_.size() - dim + k] / norm);
      }
      arr.pairs_.emplace_back(i, j);
    }
  }
  return arr;
}

HyperplaneArrangement arrangement(const SimplicialComplex& complex) {
  const auto c = complex.coordinates();
  return arrangement(complex.ambient_dim(), std::vector<double>(c.begin(), c.end()));
}

bool StratumLabel::on_wall() const noexcept {
  return std::any_of(signs.begin(), signs.end(), [](std::int8_t s) { return s == 0; });
}

StratumLabel StratumLabel::operator-() const {
  StratumLabel out;
  out.signs.reserve(signs.size());
  for (auto s : signs) out.signs.push_back(static_cast<std::int8_t>(-s));
  return out;
}

StratumLabel stratum_label(const HyperplaneArrangement& arr, const Direction& v, double wall_tol) {
  if (v.dim() != static_cast<std::size_t>(arr.dim())) {
    throw Error(ErrorKind::InvalidArgument, "direction dimension does not match the arrangement");
  }
  std::vector<double> dots(arr.num_hyperplanes());
  kernels::dot_rows(arr.differences(), v.dim(), v.components(), dots);
  StratumLabel label;
  label.signs.reserve(dots.size());
  for (double x : dots) {
    label.signs.push_back(std::abs(x) <= wall_tol ? 0 : (x > 0 ? 1 : -1));
  }
  return label;
}

StratumLabel stratum_label(const HyperplaneArrangement& arr, const Direction& v) {
  return stratum_label(arr, v, arr.default_wall_tolerance());
}

bool same_stratum(const HyperplaneArrangement& arr, const Direction& v, const Direction& w) {
  const auto lv = stratum_label(arr, v);
  const auto lw = stratum_label(arr, w);
  if (lv.on_wall() || lw.on_wall()) throw Error(ErrorKind::Wall, "direction lies on a wall");
  return lv == lw;
}

namespace {

std::vector<double> vertex_heights(const HyperplaneArrangement& arr, const Direction& v) {
  std::vector<double> h(arr.num_vertices());
  kernels::dot_rows(arr.points(), v.dim(), v.components(), h);
  return h;
}

// Index of the vertex whose height is closest to t; throws UnmatchedJump when
// farther than tol.
std::size_t match_vertex(std::span<const double> h, double t, double tol) {
  std::size_t best = h.size();
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double gap = std::abs(h[i] - t);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best == h.size() || !(best_gap <= tol)) {
    throw Error(ErrorKind::UnmatchedJump, "threshold matches no vertex height");
  }
  return best;
}

void require_same_stratum(const HyperplaneArrangement& arr, const Direction& v, const Direction& w) {
  if (v.dim() != w.dim() || v.dim() != static_cast<std::size_t>(arr.dim())) {
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  }
  if (!same_stratum(arr, v, w)) {
    throw Error(ErrorKind::Stratum, "directions lie in different strata");
  }
}

}  // namespace

EulerCurve relabel_curve(const EulerCurve& curve, const Direction& v, const Direction& w,
                         const HyperplaneArrangement& arr, double match_tol, double merge_tol) {
  const auto hv = vertex_heights(arr, v);
  const auto hw = vertex_heights(arr, w);
  std::vector<Jump> moved;
  moved.reserve(curve.size());
  for (const auto& j : curve.jumps()) {
    moved.push_back({hw[match_vertex(hv, j.threshold, match_tol)], j.delta});
  }
  return EulerCurve::from_jumps_merging(std::move(moved), merge_tol);
}

EulerCurve transfer_curve(const EulerCurve& curve_v, const Direction& v, const Direction& w,
                          const HyperplaneArrangement& arr, double match_tol) {
  require_same_stratum(arr, v, w);
  return relabel_curve(curve_v, v, w, arr, match_tol, 0.0);
}

EulerCurve transfer_curve(const EulerCurve& curve_v, const Direction& v, const Direction& w,
                          const HyperplaneArrangement& arr) {
  return transfer_curve(curve_v, v, w, arr, arr.default_match_tolerance());
}

PersistenceDiagram transfer_diagram(const PersistenceDiagram& diagram_v, const Direction& v,
                                    const Direction& w, const HyperplaneArrangement& arr,
                                    double match_tol) {
  require_same_stratum(arr, v, w);
  const auto hv = vertex_heights(arr, v);
  const auto hw = vertex_heights(arr, w);
  std::vector<DiagramPoint> moved;
  moved.reserve(diagram_v.points.size());
  for (const auto& p : diagram_v.points) {
    DiagramPoint q = p;
    q.birth = hw[match_vertex(hv, p.birth, match_tol)];
    if (p.death != kInfinity) q.death = hw[match_vertex(hv, p.death, match_tol)];
    moved.push_back(q);
  }
  return make_diagram(std::move(moved));
}

PersistenceDiagram transfer_diagram(const PersistenceDiagram& diagram_v, const Direction& v,
                                    const Direction& w, const HyperplaneArrangement& arr) {
  return transfer_diagram(diagram_v, v, w, arr, arr.default_match_tolerance());
}

namespace {

std::vector<StratumRepresentative> exact_circle(const HyperplaneArrangement& arr) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (arr.num_hyperplanes() == 0) {
    const std::vector<double> e1{1.0, 0.0};
    Direction v = Direction::from_unit(e1);
    return {{stratum_label(arr, v), v}};
  }
  // A wall through the origin with normal n meets S^1 at the two directions
  // orthogonal to n.
  std::vector<double> walls;
  for (std::size_t k = 0; k < arr.num_hyperplanes(); ++k) {
    const auto n = arr.normal(k);
    const double base = std::atan2(n[1], n[0]);
    for (double offset : {0.5 * std::numbers::pi, -0.5 * std::numbers::pi}) {
      double a = std::fmod(base + offset, two_pi);
      if (a < 0) a += two_pi;
      walls.push_back(a);
    }
  }
  std::sort(walls.begin(), walls.end());
  std::vector<double> distinct;
  for (double a : walls) {
    if (distinct.empty() || a - distinct.back() > 1e-12) distinct.push_back(a);
  }
  if (distinct.size() > 1 && distinct.front() + two_pi - distinct.back() <= 1e-12) {
    distinct.pop_back();
  }

  std::vector<StratumRepresentative> reps;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    const double a = distinct[i];
    const double b = (i + 1 < distinct.size()) ? distinct[i + 1] : distinct.front() + two_pi;
    const double mid = 0.5 * (a + b);
    const std::vector<double> raw{std::cos(mid), std::sin(mid)};
    Direction v = Direction::normalized(raw);
    StratumLabel label = stratum_label(arr, v);
    if (label.on_wall()) label = stratum_label(arr, v, 0.0);
    if (label.on_wall()) continue;
    if (std::none_of(reps.begin(), reps.end(),
                     [&](const StratumRepresentative& r) { return r.label == label; })) {
      reps.push_back({std::move(label), std::move(v)});
    }
  }
  return reps;
}

std::vector<StratumRepresentative> sampled(const HyperplaneArrangement& arr,
                                           const StrataOptions& options) {
  Rng rng(options.seed);
  std::map<StratumLabel, Direction> found;
  std::size_t stall = 0;
  for (std::size_t draws = 0; draws < options.max_samples; ++draws) {
    Direction v = random_direction(rng, arr.dim());
    StratumLabel label = stratum_label(arr, v);
    if (label.on_wall()) continue;
    if (found.emplace(std::move(label), std::move(v)).second) {
      stall = 0;
    } else if (++stall >= options.stall_factor * found.size()) {
      break;
    }
  }
  std::vector<StratumRepresentative> reps;
  reps.reserve(found.size());
  for (auto& [label, v] : found) reps.push_back({label, v});
  return reps;
}

}  // namespace

std::vector<StratumRepresentative> strata_representatives(const HyperplaneArrangement& arr,
                                                          StrataMode mode,
                                                          const StrataOptions& options) {
  if (mode == StrataMode::Exact2d) {
    if (arr.dim() != 2) throw Error(ErrorKind::Mode, "exact strata enumeration requires d = 2");
    return exact_circle(arr);
  }
  return sampled(arr, options);
}

std::uint64_t strata_count_bound(std::uint64_t hyperplanes, int d) noexcept {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 0;
  unsigned __int128 binom = 1;  // C(n, 0)
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      if (static_cast<std::uint64_t>(j) > hyperplanes) break;
      // C(n, j) = C(n, j-1) * (n - j + 1) / j, exact at every step.
      binom = binom * (hyperplanes - j + 1) / j;
    }
    total += binom;
    if (total > cap) return cap;
  }
  return static_cast<std::uint64_t>(total);
}

double strata_count_estimate(std::uint64_t hyperplanes, int d) noexcept {
  const double base = std::numbers::e * static_cast<double>(hyperplanes) / d;
  return d * std::pow(base, d);
}

}  // namespace ect

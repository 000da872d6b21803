#include "ect/euler_curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ect/errors.hpp"
#include "ect/kernels.hpp"
#include "ect/sphere.hpp"
#include "parallel.hpp"

namespace ect {

namespace {

int sign_of_dim(int dim) { return (dim % 2 == 0) ? 1 : -1; }

}  // namespace

EulerCurve EulerCurve::from_jumps(std::vector<Jump> raw) {
  return from_jumps_merging(std::move(raw), 0.0);
}

EulerCurve EulerCurve::from_jumps_merging(std::vector<Jump> raw, double tol) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Jump& a, const Jump& b) { return a.threshold < b.threshold; });
  EulerCurve curve;
  std::size_t i = 0;
  while (i < raw.size()) {
    const double anchor = raw[i].threshold;
    int delta = 0;
    std::size_t j = i;
    while (j < raw.size() && raw[j].threshold - anchor <= tol) {
      delta += raw[j].delta;
      ++j;
    }
    if (delta != 0) curve.jumps_.push_back({anchor, delta});
    curve.terminal_ += delta;
    i = j;
  }
  return curve;
}

int EulerCurve::value(double t) const noexcept {
  int v = 0;
  for (const auto& j : jumps_) {
    if (j.threshold > t) break;
    v += j.delta;
  }
  return v;
}

int curve_value(const EulerCurve& curve, double t) noexcept { return curve.value(t); }

bool same_curve(const EulerCurve& a, const EulerCurve& b, double tol) noexcept {
  if (a.size() != b.size() || a.terminal_value() != b.terminal_value()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.jumps()[i].delta != b.jumps()[i].delta) return false;
    if (!(std::abs(a.jumps()[i].threshold - b.jumps()[i].threshold) <= tol)) return false;
  }
  return true;
}

EulerCurve ect_curve(const SimplicialComplex& complex, const Direction& v) {
  const auto h = heights(complex, v);
  require_distinct_heights(h, tie_tolerance(complex));
  const auto owners = simplex_owners(complex, h);
  std::vector<int> delta(complex.num_vertices(), 0);
  for (std::size_t s = 0; s < owners.size(); ++s) {
    delta[owners[s]] += sign_of_dim(simplex_dim(complex.simplices()[s]));
  }
  std::vector<Jump> raw;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (delta[i] != 0) raw.push_back({h[i], delta[i]});
  }
  return EulerCurve::from_jumps(std::move(raw));
}

EulerCurve brute_force_curve(const SimplicialComplex& complex, const Direction& v) {
  const auto h = heights(complex, v);
  require_distinct_heights(h, tie_tolerance(complex));

  std::vector<double> entry;
  entry.reserve(complex.num_simplices());
  for (const auto& s : complex.simplices()) {
    double top = -HUGE_VAL;
    for (int u : s) top = std::max(top, h[u]);
    entry.push_back(top);
  }
  auto chi_at = [&](double t) {
    int chi = 0;
    for (std::size_t s = 0; s < entry.size(); ++s) {
      if (entry[s] <= t) chi += sign_of_dim(simplex_dim(complex.simplices()[s]));
    }
    return chi;
  };

  std::vector<double> candidates(h.begin(), h.end());
  std::sort(candidates.begin(), candidates.end());
  std::vector<Jump> raw;
  int previous = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int at = chi_at(candidates[i]);
    // The recount must be constant on the open gap before the next candidate.
    const double next = (i + 1 < candidates.size()) ? candidates[i + 1] : candidates[i] + 1.0;
    const double mid = candidates[i] + 0.5 * (next - candidates[i]);
    if (mid > candidates[i] && mid < next && chi_at(mid) != at) {
      throw Error(ErrorKind::InvalidArgument, "sublevel Euler characteristic not constant between vertex heights");
    }
    if (at != previous) raw.push_back({candidates[i], at - previous});
    previous = at;
  }
  return EulerCurve::from_jumps(std::move(raw));
}

EulerCurve sublevel_curve(const SimplicialComplex& complex, const Direction& v) {
  const auto h = heights(complex, v);
  std::vector<Jump> raw;
  raw.reserve(complex.num_simplices());
  for (const auto& s : complex.simplices()) {
    double top = -HUGE_VAL;
    for (int u : s) top = std::max(top, h[u]);
    raw.push_back({top, sign_of_dim(simplex_dim(s))});
  }
  return EulerCurve::from_jumps(std::move(raw));
}

int slice_euler_char(const SimplicialComplex& complex, const Direction& v, double t) {
  const auto h = heights(complex, v);
  const double tol = tie_tolerance(complex);
  int chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (std::abs(h[i] - t) <= tol) {
      throw Error(ErrorKind::NonGenericSlice, "slice height coincides with vertex " + std::to_string(i));
    }
  }
  for (const auto& s : complex.simplices()) {
    if (s.size() < 2) continue;
    double lo = HUGE_VAL;
    double hi = -HUGE_VAL;
    for (int u : s) {
      lo = std::min(lo, h[u]);
      hi = std::max(hi, h[u]);
    }
    // A k-simplex crossing the level cuts it in an open (k-1)-cell.
    if (lo < t && t < hi) chi += sign_of_dim(simplex_dim(s) - 1);
  }
  return chi;
}

int slice_euler_char_from_curves(const SimplicialComplex& complex, const Direction& v,
                                 double t) {
  const EulerCurve up = ect_curve(complex, v);
  const EulerCurve down = ect_curve(complex, -v);
  return up.value(t) + down.value(-t) - complex.euler_characteristic();
}

Window default_window(const SimplicialComplex& complex) noexcept {
  const double r = complex.max_vertex_norm() + 1.0;
  return {-r, r};
}

double lp_distance(const EulerCurve& a, const EulerCurve& b, double p, Window window) {
  if (!(window.lo < window.hi)) throw Error(ErrorKind::Window, "window must satisfy lo < hi");
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::InvalidArgument, "p must be a finite value >= 1");

  // Segment boundaries: window ends plus every threshold strictly inside.
  std::vector<double> cuts;
  cuts.reserve(a.size() + b.size() + 2);
  cuts.push_back(window.lo);
  for (const auto& j : a.jumps()) {
    if (j.threshold > window.lo && j.threshold < window.hi) cuts.push_back(j.threshold);
  }
  for (const auto& j : b.jumps()) {
    if (j.threshold > window.lo && j.threshold < window.hi) cuts.push_back(j.threshold);
  }
  cuts.push_back(window.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const std::size_t segments = cuts.size() - 1;
  std::vector<double> va(segments), vb(segments), width(segments);
  std::size_t ia = 0, ib = 0;
  int cur_a = 0, cur_b = 0;
  for (std::size_t s = 0; s < segments; ++s) {
    const double left = cuts[s];
    while (ia < a.size() && a.jumps()[ia].threshold <= left) cur_a += a.jumps()[ia++].delta;
    while (ib < b.size() && b.jumps()[ib].threshold <= left) cur_b += b.jumps()[ib++].delta;
    va[s] = cur_a;
    vb[s] = cur_b;
    width[s] = cuts[s + 1] - left;
  }

  if (p == 1.0) return kernels::weighted_abs_diff(va, vb, width);
  double acc = 0.0;
  for (std::size_t s = 0; s < segments; ++s) {
    acc += std::pow(std::abs(va[s] - vb[s]), p) * width[s];
  }
  return std::pow(acc, 1.0 / p);
}

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Direct: return "direct";
    case Provenance::Oracle: return "oracle";
    case Provenance::Transferred: return "transferred";
  }
  return "unknown";
}

bool EctSample::directions_distinct() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (geodesic_distance(entries[i].first, entries[j].first) <= 1e-12) return false;
    }
  }
  return true;
}

EctSample sample_ect(const SimplicialComplex& complex, std::span<const Direction> directions,
                     unsigned threads) {
  std::vector<EulerCurve> curves(directions.size());
  detail::parallel_for(directions.size(), threads,
                       [&](std::size_t i) { curves[i] = ect_curve(complex, directions[i]); });
  EctSample sample;
  sample.provenance = Provenance::Direct;
  sample.entries.reserve(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    sample.entries.emplace_back(directions[i], std::move(curves[i]));
  }
  return sample;
}

}  // namespace ect

#include "ect/reconstruction.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ect/errors.hpp"
#include "ect/sphere.hpp"
#include "parallel.hpp"

namespace ect {

void ShapeClassParams::validate() const {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  if (!(delta > 0.0) || delta > 0.5 * std::numbers::pi) {
    throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, pi/2]");
  }
  if (k_delta < 1) throw Error(ErrorKind::InvalidArgument, "k_delta must be at least 1");
}

std::int64_t vertex_count_bound(const ShapeClassParams& params) {
  params.validate();
  const double s = std::pow(std::sin(0.5 * params.delta), params.d - 1);
  return static_cast<std::int64_t>(std::floor(params.d * params.k_delta / s + 1e-9));
}

int required_C(const ShapeClassParams& params) {
  params.validate();
  return (params.d - 1) * params.k_delta + 1;
}

std::uint64_t DirectionBudget::total() const noexcept {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  return first_term > cap - strata_bound ? cap : first_term + strata_bound;
}

DirectionBudget direction_budget(const ShapeClassParams& params, std::int64_t n_vertices_bound) {
  params.validate();
  DirectionBudget b;
  const double first = required_C(params) * std::pow(1.0 + 3.0 / params.delta, params.d);
  b.first_term = first >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                                 : static_cast<std::uint64_t>(std::ceil(first - 1e-9));
  const auto nv = static_cast<unsigned __int128>(std::max<std::int64_t>(n_vertices_bound, 0));
  const unsigned __int128 pairs = nv * (nv == 0 ? 0 : nv - 1) / 2;
  const std::uint64_t n = pairs > std::numeric_limits<std::uint64_t>::max()
                              ? std::numeric_limits<std::uint64_t>::max()
                              : static_cast<std::uint64_t>(pairs);
  b.strata_bound = strata_count_bound(n, params.d);
  return b;
}

namespace {

// Incidence count of y against the critical values of the group directions.
int incidences(const EctSample& samples, const std::vector<std::size_t>& group,
               const Eigen::VectorXd& y, double eps) {
  int count = 0;
  for (std::size_t idx : group) {
    const auto& [v, curve] = samples.entries[idx];
    const double h = v.dot(std::span<const double>(y.data(), static_cast<std::size_t>(y.size())));
    for (const auto& j : curve.jumps()) {
      if (std::abs(h - j.threshold) <= eps) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// Every d-subset of the first `m` group positions, odometer style.
template <class Fn>
void for_each_subset(std::size_t m, int d, Fn&& fn) {
  if (static_cast<std::size_t>(d) > m) return;
  std::vector<std::size_t> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    if (!fn(pick)) return;
    int i = d - 1;
    while (i >= 0 && pick[i] == m - d + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int k = i + 1; k < d; ++k) pick[k] = pick[k - 1] + 1;
  }
}

std::vector<Eigen::VectorXd> detect_in_group(const EctSample& samples,
                                             const std::vector<std::size_t>& group, int d, int C,
                                             double eps_inc, std::uint64_t max_systems,
                                             std::atomic<std::uint64_t>& systems) {
  std::vector<Eigen::VectorXd> found;
  // A true vertex is incident to at least C of the g directions, so its d
  // smallest incident positions all lie among the first g - C + d.
  const std::size_t m = group.size() - static_cast<std::size_t>(C) + static_cast<std::size_t>(d);
  Eigen::MatrixXd A(d, d);
  Eigen::VectorXd b(d);
  for_each_subset(m, d, [&](const std::vector<std::size_t>& pick) {
    std::vector<const std::vector<Jump>*> jumps(d);
    std::size_t combos = 1;
    for (int r = 0; r < d; ++r) {
      const auto& [v, curve] = samples.entries[group[pick[r]]];
      for (int c = 0; c < d; ++c) A(r, c) = v[c];
      jumps[r] = &curve.jumps();
      combos *= curve.size();
    }
    if (combos == 0) return true;
    if (systems.fetch_add(combos) + combos > max_systems) {
      throw Error(ErrorKind::CostExceeded, "vertex detection exceeded the linear-system cap");
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible()) return true;  // singular: skip this subset
    std::vector<std::size_t> choice(d, 0);
    for (;;) {
      for (int r = 0; r < d; ++r) b(r) = (*jumps[r])[choice[r]].threshold;
      Eigen::VectorXd y = lu.solve(b);
      if (y.allFinite() && incidences(samples, group, y, eps_inc) >= C) found.push_back(std::move(y));
      int r = d - 1;
      while (r >= 0 && ++choice[r] == jumps[r]->size()) choice[r--] = 0;
      if (r < 0) break;
    }
    return true;
  });
  return found;
}

}  // namespace

std::vector<std::vector<double>> detect_vertices(const EctSample& samples,
                                                 const std::vector<std::vector<std::size_t>>& groups_in,
                                                 const ShapeClassParams& params,
                                                 const DetectOptions& options) {
  params.validate();
  const int d = params.d;
  const int C = required_C(params);
  for (const auto& [v, curve] : samples.entries) {
    if (v.dim() != static_cast<std::size_t>(d)) {
      throw Error(ErrorKind::InvalidArgument, "sample direction dimension differs from d");
    }
  }

  std::vector<std::vector<std::size_t>> groups = groups_in;
  if (groups.empty()) {
    const double cosr = std::cos(params.delta);
    for (std::size_t i = 0; i < samples.entries.size(); ++i) {
      std::vector<std::size_t> g;
      for (std::size_t j = 0; j < samples.entries.size(); ++j) {
        if (samples.entries[i].first.dot(samples.entries[j].first.components()) >= cosr) g.push_back(j);
      }
      groups.push_back(std::move(g));
    }
  }
  for (const auto& g : groups) {
    if (g.size() < static_cast<std::size_t>(C)) {
      throw Error(ErrorKind::NetTooSparse, "a direction group has " + std::to_string(g.size()) +
                                               " directions, fewer than C = " + std::to_string(C));
    }
  }

  double scale = 0.0;
  for (const auto& [v, curve] : samples.entries) {
    for (const auto& j : curve.jumps()) scale = std::max(scale, std::abs(j.threshold));
  }
  if (scale == 0.0) scale = 1.0;
  const double eps_inc = options.incidence_rel * scale;
  const double eps_pt = options.cluster_rel * scale;

  std::vector<std::vector<Eigen::VectorXd>> per_group(groups.size());
  std::atomic<std::uint64_t> systems{0};
  detail::parallel_for(groups.size(), options.threads, [&](std::size_t g) {
    per_group[g] = detect_in_group(samples, groups[g], d, C, eps_inc, options.max_systems, systems);
  });

  // Greedy clustering in group order; each cluster is keyed by its first point.
  std::vector<Eigen::VectorXd> seeds;
  std::vector<Eigen::VectorXd> sums;
  std::vector<int> counts;
  for (const auto& pts : per_group) {
    for (const auto& y : pts) {
      std::size_t k = 0;
      while (k < seeds.size() && (seeds[k] - y).norm() > eps_pt) ++k;
      if (k == seeds.size()) {
        seeds.push_back(y);
        sums.push_back(y);
        counts.push_back(1);
      } else {
        sums[k] += y;
        ++counts[k];
      }
    }
  }
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const Eigen::VectorXd c = sums[k] / counts[k];
    out.emplace_back(c.data(), c.data() + c.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReconstructedEct::ReconstructedEct(HyperplaneArrangement arr, std::vector<StratumEntry> strata)
    : arr_(std::move(arr)), strata_(std::move(strata)) {
  std::sort(strata_.begin(), strata_.end(),
            [](const StratumEntry& a, const StratumEntry& b) { return a.label < b.label; });
}

const StratumEntry* ReconstructedEct::find(const StratumLabel& label) const {
  const auto it = std::lower_bound(strata_.begin(), strata_.end(), label,
                                   [](const StratumEntry& e, const StratumLabel& l) { return e.label < l; });
  return it != strata_.end() && it->label == label ? &*it : nullptr;
}

EulerCurve ReconstructedEct::answer_via(const Direction& w, const Direction& probe) const {
  const StratumLabel label = stratum_label(arr_, probe);
  const StratumEntry* e = label.on_wall() ? nullptr : find(label);
  if (e == nullptr) {
    throw Error(ErrorKind::ReconstructionFailed, "no sampled stratum contains the direction");
  }
  // Coinciding heights on a wall collapse to one jump with the summed delta.
  return relabel_curve(e->curve, e->direction, w, arr_, arr_.default_match_tolerance(),
                       arr_.default_wall_tolerance());
}

namespace {

// Off-wall probes near a wall direction w: w +- eps u for a few fixed u.
std::vector<Direction> wall_probes(const HyperplaneArrangement& arr, const Direction& w, double sign) {
  const auto label = stratum_label(arr, w);
  // Stay closer to w than any wall w is not on.
  double gap = 1e-3;
  for (std::size_t k = 0; k < arr.num_hyperplanes(); ++k) {
    if (label.signs[k] == 0) continue;
    const auto n = arr.normal(k);
    gap = std::min(gap, 0.5 * std::abs(w.dot(n)));
  }
  Rng rng(0x5DEECE66Dull);
  std::vector<Direction> probes;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Direction u = random_direction(rng, arr.dim());
    std::vector<double> p(w.dim());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = w[i] + sign * gap * u[i];
    probes.push_back(Direction::normalized(p));
  }
  return probes;
}

}  // namespace

EulerCurve ReconstructedEct::answer(const Direction& w) const {
  const StratumLabel label = stratum_label(arr_, w);
  if (!label.on_wall()) {
    const StratumEntry* e = find(label);
    if (e == nullptr) {
      throw Error(ErrorKind::ReconstructionFailed, "no sampled stratum contains the direction");
    }
    return transfer_curve(e->curve, e->direction, w, arr_);
  }
  for (const auto& p : wall_probes(arr_, w, 1.0)) {
    const auto pl = stratum_label(arr_, p);
    if (!pl.on_wall() && find(pl) != nullptr) return answer_via(w, p);
  }
  throw Error(ErrorKind::ReconstructionFailed, "no sampled stratum is adjacent to the wall direction");
}

EulerCurve ReconstructedEct::answer_from_opposite_side(const Direction& w) const {
  if (!stratum_label(arr_, w).on_wall()) return answer(w);
  for (const auto& p : wall_probes(arr_, w, -1.0)) {
    const auto pl = stratum_label(arr_, p);
    if (!pl.on_wall() && find(pl) != nullptr) return answer_via(w, p);
  }
  throw Error(ErrorKind::ReconstructionFailed, "no sampled stratum is adjacent to the wall direction");
}

Reconstruction reconstruct(EctOracle& oracle, const ShapeClassParams& params,
                           const ReconstructOptions& options) {
  params.validate();
  if (params.d < 2) throw Error(ErrorKind::InvalidArgument, "reconstruction needs d >= 2");
  const int C = required_C(params);
  const DirectionNet net = delta_C_net(params.d, params.delta, C, options.seed);

  EctSample samples;
  samples.provenance = Provenance::Oracle;
  samples.entries.reserve(net.size());
  for (const auto& v : net.directions) samples.entries.emplace_back(v, oracle.query(v));

  DetectOptions detect = options.detect;
  detect.threads = std::max(detect.threads, options.threads);
  auto vertices = detect_vertices(samples, net.groups, params, detect);
  if (vertices.empty()) throw Error(ErrorKind::ReconstructionFailed, "no vertices detected");

  std::vector<double> flat;
  for (const auto& x : vertices) flat.insert(flat.end(), x.begin(), x.end());
  HyperplaneArrangement arr = arrangement(params.d, std::move(flat));
  arr.set_relative_tolerances(options.wall_rel, options.match_rel);

  const StrataMode mode =
      options.strata_mode.value_or(params.d == 2 ? StrataMode::Exact2d : StrataMode::Sampled);
  const auto reps = strata_representatives(arr, mode, {.seed = options.seed});
  if (reps.empty()) throw Error(ErrorKind::ReconstructionFailed, "no strata representatives");

  std::vector<StratumEntry> strata;
  strata.reserve(reps.size());
  for (const auto& r : reps) strata.push_back({r.label, r.direction, oracle.query(r.direction)});

  ReconstructionReport report;
  report.params = params;
  report.vertices = std::move(vertices);
  report.strata = strata;
  report.net_size = net.size();
  report.total_queries = oracle.query_count();
  report.budget = direction_budget(params, vertex_count_bound(params));
  return {std::move(report), ReconstructedEct(std::move(arr), std::move(strata))};
}

HeldOutResult held_out_error(const ReconstructedEct& ect, const SimplicialComplex& truth,
                             std::size_t n, std::uint64_t seed) {
  HeldOutResult r;
  Rng rng(seed);
  const Window window = default_window(truth);
  const double tol = tie_tolerance(truth);
  while (r.directions < n) {
    const Direction w = random_direction(rng, truth.ambient_dim());
    const auto h = heights(truth, w);
    try {
      require_distinct_heights(h, tol);
    } catch (const TieError&) {
      continue;
    }
    const EulerCurve expect = ect_curve(truth, w);
    const EulerCurve got = ect.answer(w);
    ++r.directions;
    r.max_l1 = std::max(r.max_l1, lp_distance(expect, got, 1.0, window));
    if (expect.size() != got.size()) {
      r.deltas_match = false;
      continue;
    }
    for (std::size_t i = 0; i < expect.size(); ++i) {
      if (expect.jumps()[i].delta != got.jumps()[i].delta) r.deltas_match = false;
      r.max_threshold_error = std::max(
          r.max_threshold_error, std::abs(expect.jumps()[i].threshold - got.jumps()[i].threshold));
    }
  }
  return r;
}

}  // namespace ect

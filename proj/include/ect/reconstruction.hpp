#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ect/complex.hpp"
#include "ect/euler_curve.hpp"
#include "ect/nets.hpp"
#include "ect/strata.hpp"

namespace ect {

// Shape class K(d, delta, k_delta): every vertex observable on some
// delta-ball of directions, and at most k_delta vertices Euler-critical for
// directions in any delta-ball.
struct ShapeClassParams {
  int d = 2;
  double delta = 0.5;  // great-circle radians
  int k_delta = 1;

  // Throws InvalidArgument unless d >= 1, 0 < delta <= pi/2, k_delta >= 1.
  void validate() const;
};

// floor(d k_delta / sin(delta / 2)^(d - 1)).
std::int64_t vertex_count_bound(const ShapeClassParams& params);

// (d - 1) k_delta + 1.
int required_C(const ShapeClassParams& params);

struct DirectionBudget {
  std::uint64_t first_term = 0;    // ceil(((d-1) k + 1) (1 + 3/delta)^d)
  std::uint64_t strata_bound = 0;  // sum_{j<=d} C(n, j), n = C(vertices, 2)

  std::uint64_t total() const noexcept;
};

DirectionBudget direction_budget(const ShapeClassParams& params, std::int64_t n_vertices_bound);

// Answers Euler-curve queries about a hidden shape and counts them.
class EctOracle {
 public:
  struct Record {
    Direction direction;
    EulerCurve curve;
  };

  virtual ~EctOracle() = default;

  // Counted query; every call is also appended to the transcript.
  EulerCurve query(const Direction& v);

  std::size_t query_count() const noexcept { return count_.load(); }
  std::vector<Record> transcript() const;

 protected:
  virtual EulerCurve answer(const Direction& v) = 0;

 private:
  std::atomic<std::size_t> count_{0};
  mutable std::mutex mutex_;
  std::vector<Record> transcript_;
};

// Wraps a hidden complex. Answers are exact for every direction, walls
// included.
class ComplexOracle : public EctOracle {
 public:
  explicit ComplexOracle(SimplicialComplex complex) : complex_(std::move(complex)) {}

  int dim() const noexcept { return complex_.ambient_dim(); }

 protected:
  EulerCurve answer(const Direction& v) override;

 private:
  SimplicialComplex complex_;
};

// Replays a recorded transcript; unknown directions raise UnknownDirection.
class ReplayOracle : public EctOracle {
 public:
  explicit ReplayOracle(std::vector<Record> records, double tolerance = 1e-12)
      : records_(std::move(records)), tolerance_(tolerance) {}

 protected:
  EulerCurve answer(const Direction& v) override;

 private:
  std::vector<Record> records_;
  double tolerance_;
};

struct ObservabilityResult {
  bool observable = false;
  std::optional<Direction> witness;  // ball center when observable
};

struct ObservabilityOptions {
  std::size_t centers = 4096;
  std::uint64_t seed = 1;
};

// Monte Carlo search for a ball B(c, delta) on which every one of `samples`
// uniform directions sees an Euler-curve jump at the vertex. One-sided:
// `true` comes with a witness, `false` means no witness was found.
ObservabilityResult is_delta_observable(const SimplicialComplex& complex, int vertex,
                                        double delta, std::size_t samples,
                                        const ObservabilityOptions& options = {});

struct ClassViolation {
  enum class Kind { NotObservable, TooManyCritical };
  Kind kind;
  int vertex = -1;                   // NotObservable
  std::optional<Direction> center;   // TooManyCritical
  int critical_count = 0;            // TooManyCritical
  std::string message;
};

struct ClassReport {
  std::vector<ClassViolation> violations;
  bool in_class() const noexcept { return violations.empty(); }
};

// Checks both class conditions by sampling: observability of every vertex,
// and the number of vertices critical somewhere in sampled delta-balls.
ClassReport class_check(const SimplicialComplex& complex, const ShapeClassParams& params,
                        std::size_t samples, std::uint64_t seed = 1);

struct DetectOptions {
  double incidence_rel = 1e-7;  // epsilon_inc = incidence_rel * scale
  double cluster_rel = 1e-5;    // epsilon_pt = cluster_rel * scale
  std::uint64_t max_systems = 50'000'000;
  unsigned threads = 1;  // groups are independent
};

// Locates vertices from Euler curves sampled on a general-position
// (delta, C)-net. Each group is a set of net directions of diameter at most
// 2 delta (for delta_C_net, the C copies of one base point); when `groups` is
// empty, caps B(v, delta) around every sample direction are used instead.
// Throws NetTooSparse, CostExceeded.
std::vector<std::vector<double>> detect_vertices(const EctSample& samples,
                                                 const std::vector<std::vector<std::size_t>>& groups,
                                                 const ShapeClassParams& params,
                                                 const DetectOptions& options = {});

struct StratumEntry {
  StratumLabel label;
  Direction direction;
  EulerCurve curve;
};

// Full ECT assembled from one queried curve per stratum of the detected
// arrangement.
class ReconstructedEct {
 public:
  ReconstructedEct(HyperplaneArrangement arr, std::vector<StratumEntry> strata);

  const HyperplaneArrangement& arrangement() const noexcept { return arr_; }
  const std::vector<StratumEntry>& strata() const noexcept { return strata_; }

  // Euler curve at any direction. Directions on walls are evaluated from an
  // adjacent stratum with coinciding heights merged. Throws
  // ReconstructionFailed if the stratum was never sampled.
  EulerCurve answer(const Direction& w) const;

  // answer(w) from the adjacent stratum on the other side of the walls
  // through w (differs from answer only for wall directions).
  EulerCurve answer_from_opposite_side(const Direction& w) const;

 private:
  const StratumEntry* find(const StratumLabel& label) const;
  EulerCurve answer_via(const Direction& w, const Direction& probe) const;

  HyperplaneArrangement arr_;
  std::vector<StratumEntry> strata_;
};

struct ReconstructOptions {
  std::uint64_t seed = 1;
  // Exact2d for d = 2, Sampled otherwise.
  std::optional<StrataMode> strata_mode;
  DetectOptions detect;
  double wall_rel = 1e-9;    // arrangement tolerances, relative to diameter
  double match_rel = 1e-7;
  unsigned threads = 1;
};

struct ReconstructionReport {
  ShapeClassParams params;
  std::vector<std::vector<double>> vertices;
  std::vector<StratumEntry> strata;
  std::size_t net_size = 0;
  std::size_t total_queries = 0;
  DirectionBudget budget;  // with n_vertices_bound = vertex_count_bound(params)
  std::optional<double> held_out_max_l1;
};

struct Reconstruction {
  ReconstructionReport report;
  ReconstructedEct ect;
};

// Queries the oracle on a (delta, C)-net, detects the vertex set, queries one
// direction per stratum of its arrangement and assembles the full ECT.
Reconstruction reconstruct(EctOracle& oracle, const ShapeClassParams& params,
                           const ReconstructOptions& options = {});

struct HeldOutResult {
  double max_l1 = 0.0;
  double max_threshold_error = 0.0;
  bool deltas_match = true;
  std::size_t directions = 0;
};

// Compares reconstructed answers with direct curves of `truth` on n uniform
// generic directions. Does not query any oracle.
HeldOutResult held_out_error(const ReconstructedEct& ect, const SimplicialComplex& truth,
                             std::size_t n, std::uint64_t seed);

}  // namespace ect

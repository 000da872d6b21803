#include "ect/cli.hpp"

#include <memory>
#include <ostream>

#include "ect/errors.hpp"
#include "ect/io.hpp"
#include "ect/persistence.hpp"
#include "ect/reconstruction.hpp"
#include "ect/shape_stats.hpp"
#include "ect/sphere.hpp"
#include "ect/strata.hpp"
#include "parallel.hpp"

namespace ect::cli {

namespace {

using io::Json;

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

std::uint64_t need_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw Error(ErrorKind::InvalidArgument, "--seed is required for randomized modes");
  return *cfg.seed;
}

SimplicialComplex need_shape(const std::string& path, const char* flag) {
  if (path.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " is required");
  return io::load_shape(path);
}

std::vector<Direction> directions(const RunConfig& cfg, int d) {
  std::vector<Direction> out;
  for (const auto& s : cfg.directions) {
    Direction v = io::parse_direction(s);
    if (v.dim() != static_cast<std::size_t>(d)) {
      throw Error(ErrorKind::InvalidArgument, "direction '" + s + "' has the wrong dimension");
    }
    out.push_back(std::move(v));
  }
  if (cfg.random > 0) {
    Rng rng(need_seed(cfg));
    for (std::size_t i = 0; i < cfg.random; ++i) out.push_back(random_direction(rng, d));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "give --direction or --random");
  return out;
}

bool wants_json(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

int run_ect(const RunConfig& cfg, std::ostream& out) {
  const auto K = need_shape(cfg.shape, "--shape");
  const auto dirs = directions(cfg, K.ambient_dim());
  // sublevel_curve accepts directions on walls as well.
  std::vector<EulerCurve> curves(dirs.size());
  detail::parallel_for(dirs.size(), cfg.threads, [&](std::size_t i) { curves[i] = sublevel_curve(K, dirs[i]); });

  std::string text;
  if (wants_json(cfg.out)) {
    Json j = Json::array();
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      j.push_back({{"direction", io::direction_to_json(dirs[i])}, {"curve", io::curve_to_json(curves[i])}});
    }
    text = j.dump(2) + "\n";
  } else if (dirs.size() == 1) {
    text = io::curve_to_csv(curves[0]);
  } else {
    text = "direction,t,value\n";
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const std::string csv = io::curve_to_csv(curves[i]);
      std::size_t pos = csv.find('\n') + 1;
      while (pos < csv.size()) {
        const auto nl = csv.find('\n', pos);
        text += std::to_string(i) + "," + csv.substr(pos, nl - pos + 1);
        pos = nl + 1;
      }
    }
  }
  emit(cfg.out, text, out);
  return kOk;
}

int run_pht(const RunConfig& cfg, std::ostream& out) {
  const auto K = need_shape(cfg.shape, "--shape");
  const auto dirs = directions(cfg, K.ambient_dim());
  std::vector<std::vector<PersistenceDiagram>> diagrams(dirs.size());
  detail::parallel_for(dirs.size(), cfg.threads, [&](std::size_t i) { diagrams[i] = pht(K, dirs[i]); });
  Json j = Json::array();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    Json points = Json::array();
    for (const auto& dg : diagrams[i]) {
      for (auto& p : io::diagram_to_json(dg)) points.push_back(std::move(p));
    }
    j.push_back({{"direction", io::direction_to_json(dirs[i])}, {"diagram", points}});
  }
  emit(cfg.out, j.dump(2) + "\n", out);
  return kOk;
}

std::optional<StrataMode> parse_mode(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "exact2d") return StrataMode::Exact2d;
  if (s == "sampled") return StrataMode::Sampled;
  throw Error(ErrorKind::InvalidArgument, "unknown strata mode '" + s + "'");
}

int run_strata(const RunConfig& cfg, std::ostream& out) {
  const auto K = need_shape(cfg.shape, "--shape");
  auto arr = arrangement(K);
  arr.set_relative_tolerances(cfg.wall_rel, cfg.match_rel);
  const StrataMode mode =
      parse_mode(cfg.strata_mode).value_or(K.ambient_dim() == 2 ? StrataMode::Exact2d : StrataMode::Sampled);
  StrataOptions opts;
  if (mode == StrataMode::Sampled) opts.seed = need_seed(cfg);
  const auto reps = strata_representatives(arr, mode, opts);
  Json j = {{"mode", mode == StrataMode::Exact2d ? "exact2d" : "sampled"},
            {"hyperplanes", arr.num_hyperplanes()},
            {"strata_count_bound", strata_count_bound(arr.num_hyperplanes(), K.ambient_dim())},
            {"representatives", io::representatives_to_json(reps)}};
  emit(cfg.out, j.dump(2) + "\n", out);
  return kOk;
}

int run_class_check(const RunConfig& cfg, std::ostream& out) {
  const auto K = need_shape(cfg.shape, "--shape");
  const ShapeClassParams params{K.ambient_dim(), cfg.delta, cfg.k_delta};
  params.validate();
  const auto report = class_check(K, params, cfg.samples, need_seed(cfg));
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json e = {{"kind", v.kind == ClassViolation::Kind::NotObservable ? "not_observable" : "too_many_critical"},
              {"message", v.message}};
    if (v.vertex >= 0) e["vertex"] = v.vertex;
    if (v.center) e["center"] = io::direction_to_json(*v.center);
    if (v.critical_count > 0) e["critical_count"] = v.critical_count;
    violations.push_back(std::move(e));
  }
  Json j = {{"in_class", report.in_class()},
            {"params", {{"d", params.d}, {"delta", params.delta}, {"k_delta", params.k_delta}}},
            {"vertex_count_bound", vertex_count_bound(params)},
            {"vertices", K.num_vertices()},
            {"violations", violations}};
  emit(cfg.out, j.dump(2) + "\n", out);
  return report.in_class() ? kOk : kClassViolation;
}

int run_reconstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<SimplicialComplex> K;
  if (!cfg.shape.empty()) K = io::load_shape(cfg.shape);
  std::unique_ptr<EctOracle> oracle;
  int d = 0;
  if (!cfg.replay.empty()) {
    const Json rep = Json::parse(io::read_file(cfg.replay));
    auto records = io::transcript_from_json(rep);
    if (records.empty()) throw Error(ErrorKind::Parse, "replay transcript is empty");
    d = static_cast<int>(records.front().direction.dim());
    oracle = std::make_unique<ReplayOracle>(std::move(records));
  } else {
    if (!K) throw Error(ErrorKind::InvalidArgument, "--shape or --replay is required");
    d = K->ambient_dim();
    oracle = std::make_unique<ComplexOracle>(*K);
  }
  const ShapeClassParams params{d, cfg.delta, cfg.k_delta};
  params.validate();

  ReconstructOptions opts;
  opts.seed = need_seed(cfg);
  opts.strata_mode = parse_mode(cfg.strata_mode);
  opts.detect.incidence_rel = cfg.incidence_rel;
  opts.detect.cluster_rel = cfg.cluster_rel;
  opts.detect.max_systems = cfg.max_systems;
  opts.wall_rel = cfg.wall_rel;
  opts.match_rel = cfg.match_rel;
  opts.threads = cfg.threads;

  std::optional<Reconstruction> rec;
  try {
    rec.emplace(reconstruct(*oracle, params, opts));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::Parse ||
        e.kind() == ErrorKind::BadRadius) {
      throw;
    }
    err << Json({{"error", "reconstruction_failed"}, {"kind", to_string(e.kind())}, {"message", e.what()}}).dump()
        << "\n";
    return kReconstructionFailure;
  }

  bool held_out_ok = true;
  if (K && cfg.held_out > 0) {
    try {
      const auto h = held_out_error(rec->ect, *K, cfg.held_out, opts.seed ^ 0xA5A5A5A5ull);
      rec->report.held_out_max_l1 = h.max_l1;
      held_out_ok = h.deltas_match && h.max_threshold_error <= 1e-6;
    } catch (const Error&) {
      held_out_ok = false;
    }
  }
  const Json report = io::report_to_json(rec->report, oracle->transcript());
  emit(cfg.report.empty() ? cfg.out : cfg.report, report.dump(2) + "\n", out);
  if (!held_out_ok) {
    err << Json({{"error", "reconstruction_failed"},
                 {"kind", "HeldOutMismatch"},
                 {"message", "reconstructed curves differ from the shape on held-out directions"}})
               .dump()
        << "\n";
    return kReconstructionFailure;
  }
  return kOk;
}

int run_compare(const RunConfig& cfg, std::ostream& out) {
  const auto A = need_shape(cfg.shape_a, "--a");
  const auto B = need_shape(cfg.shape_b, "--b");
  const auto report = invariance_test(A, B, cfg.n, need_seed(cfg), cfg.trials, cfg.threads);
  emit(cfg.out, io::invariance_to_json(report).dump(2) + "\n", out);
  if (!cfg.csv.empty()) io::write_file(cfg.csv, io::sample_summary_csv(report.sample_a, report.sample_b));
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& s = config.subcommand;
    if (s == "ect") return run_ect(config, out);
    if (s == "pht") return run_pht(config, out);
    if (s == "strata") return run_strata(config, out);
    if (s == "class-check") return run_class_check(config, out);
    if (s == "reconstruct") return run_reconstruct(config, out, err);
    if (s == "compare") return run_compare(config, out);
    throw Error(ErrorKind::InvalidArgument, "unknown subcommand '" + s + "'");
  } catch (const ParseError& e) {
    err << Json({{"error", "parse"}, {"kind", "Parse"}, {"line", e.line()}, {"message", e.what()}}).dump() << "\n";
  } catch (const Error& e) {
    err << Json({{"error", "invalid_input"}, {"kind", to_string(e.kind())}, {"message", e.what()}}).dump() << "\n";
  } catch (const Json::exception& e) {
    err << Json({{"error", "parse"}, {"kind", "Parse"}, {"message", e.what()}}).dump() << "\n";
  } catch (const std::exception& e) {
    err << Json({{"error", "invalid_input"}, {"kind", "Other"}, {"message", e.what()}}).dump() << "\n";
  }
  return kInvalidInput;
}

}  // namespace ect::cli

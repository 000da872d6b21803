#include <iostream>

#include "CLI11.hpp"

#include "ect/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristic and persistent homology transforms of embedded complexes"};
  app.require_subcommand(1);
  ect::cli::RunConfig cfg;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.out, "output file (default stdout)");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "random seed");
  };
  auto shape = [&](CLI::App* sub) { sub->add_option("--shape", cfg.shape, "shape file (.json or .off)"); };
  auto dirs = [&](CLI::App* sub) {
    sub->add_option("--direction", cfg.directions, "direction as comma-separated components (repeatable)");
    sub->add_option("--random", cfg.random, "number of uniform random directions");
  };
  auto tolerances = [&](CLI::App* sub) {
    sub->add_option("--wall-rel", cfg.wall_rel, "wall tolerance relative to diameter");
    sub->add_option("--match-rel", cfg.match_rel, "jump-to-vertex matching tolerance relative to diameter");
    sub->add_option("--strata-mode", cfg.strata_mode, "auto | exact2d | sampled");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--delta", cfg.delta, "observability radius (radians)");
    sub->add_option("--k-delta", cfg.k_delta, "critical vertices per delta-ball");
  };

  auto* ect = app.add_subcommand("ect", "Euler curves along directions");
  shape(ect), dirs(ect), common(ect);
  auto* pht = app.add_subcommand("pht", "persistence diagrams along directions");
  shape(pht), dirs(pht), common(pht);
  auto* strata = app.add_subcommand("strata", "stratum representatives of the vertex arrangement");
  shape(strata), tolerances(strata), common(strata);
  auto* check = app.add_subcommand("class-check", "sampled shape-class membership check");
  shape(check), params(check), common(check);
  check->add_option("--samples", cfg.samples, "directions per sampled ball");
  auto* rec = app.add_subcommand("reconstruct", "recover the full ECT from finitely many queries");
  shape(rec), params(rec), tolerances(rec), common(rec);
  rec->add_option("--report", cfg.report, "report JSON path");
  rec->add_option("--replay", cfg.replay, "answer queries from a previous report's transcript");
  rec->add_option("--held-out", cfg.held_out, "held-out directions checked against --shape");
  rec->add_option("--incidence-rel", cfg.incidence_rel, "incidence tolerance relative to shape scale");
  rec->add_option("--cluster-rel", cfg.cluster_rel, "clustering tolerance relative to shape scale");
  rec->add_option("--max-systems", cfg.max_systems, "cap on linear systems solved during detection");
  auto* cmp = app.add_subcommand("compare", "O(d)-invariance test between two shapes");
  cmp->add_option("--a", cfg.shape_a, "first shape")->required();
  cmp->add_option("--b", cfg.shape_b, "second shape")->required();
  cmp->add_option("--n", cfg.n, "directions per sample");
  cmp->add_option("--trials", cfg.trials, "null-distribution trials");
  cmp->add_option("--csv", cfg.csv, "sample summary CSV path");
  common(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ect::cli::kInvalidInput;
  }
  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    if (sub->count("--seed") > 0) cfg.seed = seed;
  }
  return ect::cli::run(cfg, std::cout, std::cerr);
}

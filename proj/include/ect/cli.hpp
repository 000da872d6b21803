#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ect::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kClassViolation = 3,
  kReconstructionFailure = 4,
};

struct RunConfig {
  std::string subcommand;  // ect | pht | reconstruct | compare | strata | class-check

  std::string shape;   // --shape
  std::string shape_a; // --a
  std::string shape_b; // --b
  std::string replay;  // --replay: report JSON whose transcript answers queries

  std::vector<std::string> directions;  // --direction "x,y,..."
  std::size_t random = 0;               // --random N
  std::optional<std::uint64_t> seed;

  std::string out;     // default stdout
  std::string report;  // reconstruct report path
  std::string csv;     // compare: sample summaries
  unsigned threads = 1;

  double delta = 0.5;
  int k_delta = 1;
  std::size_t samples = 200;   // class-check
  std::size_t n = 64;          // compare sample size
  std::size_t trials = 20;     // compare null trials
  std::size_t held_out = 100;  // reconstruct held-out directions
  std::string strata_mode = "auto";  // auto | exact2d | sampled

  double wall_rel = 1e-9;
  double match_rel = 1e-7;
  double incidence_rel = 1e-7;
  double cluster_rel = 1e-5;
  std::uint64_t max_systems = 50'000'000;
};

// Executes one subcommand. Artifacts go to the configured paths or `out`;
// failures print {"error", "kind", "message"} JSON to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ect::cli

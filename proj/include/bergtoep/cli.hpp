#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergtoep/io.hpp"

namespace bergtoep {

/// Resolved run configuration.  Defaults < config file < flags.
struct RunConfig {
  std::string command;  // gram | toeplitz | spectrum | commutator | intertwine |
                        // kernel-fourier | l1 | check
  int n = 1;
  double lambda = 2.5;
  int degree = 6;
  std::vector<std::string> symbols;
  std::string element_path;
  std::string group = "elliptic";
  int torus_nodes = 64;      // M
  int line_nodes = 4001;     // L
  double halfwidth = 40.0;   // S
  std::vector<double> s_values;
  int xi_nodes = 801;
  double xi_max = 2.0;
  std::uint64_t seed = 42;
  std::string output;
  std::string format = "csv";
  std::string method = "both";  // spectrum: diag | conv | both
  std::string suite = "all";
  int threads = 0;
  bool binary = false;
  std::size_t max_basis = kDefaultMaxBasis;

  nlohmann::json to_json() const;
};

/// Parses flags (and an optional --config JSON file), validates, and derives
/// the weight.  Throws ConfigError with a field diagnostic on bad input.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes the command.  Exit codes: 0 success, 1 check-suite failure,
/// 2 config/validation error, 3 numeric guard tripped.
int run(const RunConfig& cfg);

/// parse + run + error-to-exit-code mapping; the CLI main wraps this.
int cli_main(int argc, char** argv);

}  // namespace bergtoep

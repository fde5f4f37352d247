#pragma once

#include "xtalk/dynamics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xtalk {

// Full run configuration: the attack window plus protocol, defense and
// output settings. Parsed from a single strict JSON document; unknown keys
// are rejected by name and every field is validated before a run starts.
struct RunConfig {
  AttackConfig attack;

  // protocol block
  std::string lambda_grid = "0:90:5";  // degrees, start:stop:step
  int sqqnn_degree = 2;
  double sqqnn_test_fraction = 0.3;
  std::uint64_t sqqnn_seed = 42;
  double sqqnn_epsilon = 1e-16;

  // defense block
  int defense_shots = 10000;
  double defense_threshold = 5.0;
  std::uint64_t defense_seed = 1;

  // output block
  std::string out_dir = "results";
  bool emit_svg = false;
};

RunConfig default_run_config();

// Strict parse: throws ValidationError naming the offending key/field.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Canonical one-line JSON echo of the fully resolved config; embedded in
// every output file so runs can be reproduced from their artifacts.
std::string resolved_config_json(const RunConfig& c);

// Parse "start:stop:step" (degrees) into an inclusive grid.
std::vector<double> parse_degree_grid(const std::string& grid);

void validate_run_config(const RunConfig& c);

}  // namespace xtalk

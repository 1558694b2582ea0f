/*
   Copyright 2026 The hullwalk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hullwalk/montecarlo.hpp"

namespace hullwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// An experiment config file, parsed. `echo` lists every accepted key as
/// "section.key" = value, in file order.
struct RunConfig {
  ExperimentConfig experiment;
  std::vector<std::pair<std::string, std::string>> echo;
};

/// Parses INI-style text with sections [model], [run] and [outputs].
/// Throws InputError naming the line and field on any problem.
RunConfig parse_config(const std::string &text);
RunConfig load_config(const std::filesystem::path &path);

struct KsRow {
  std::size_t n = 0;
  std::string metric; // e.g. "ks_A_a1"
  double distance = 0.0;
};

struct SimulationOutput {
  std::vector<EstimatorReport> reports; // one per run length
  std::vector<KsRow> ks;
};

/// Runs every length in n_grid (or just n) with the configured master seed.
SimulationOutput run_simulation(const ExperimentConfig &config);

/// Tidy CSV, one row per (n, metric). Numbers use the shortest decimal form
/// that round-trips; the bytes depend only on the config.
std::string simulation_csv(const SimulationOutput &out);

nlohmann::json report_json(const EstimatorReport &rep);

/// Shortest round-trip decimal form of x, independent of locale.
std::string format_double(double x);

/// Entry point of the hullwalk tool; returns the process exit code.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace hullwalk::cli

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

// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hullwalk/cli.hpp"
#include "hullwalk/verify.hpp"

using namespace hullwalk;
namespace fs = std::filesystem;

namespace {

verify::CheckResult both(const std::string &name, const verify::CheckResult &a,
                         const verify::CheckResult &b) {
  return {name, a.passed && b.passed,
          a.name + (a.passed ? " ok" : " FAILED") + ": " + a.detail + " | " + b.name +
              (b.passed ? " ok" : " FAILED") + ": " + b.detail,
          a.seconds + b.seconds};
}

std::string slurp(const fs::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int simulate(const fs::path &config, const fs::path &out, const std::string &threads) {
  std::vector<std::string> args{"hullwalk", "simulate", "--config", config.string(),
                                "--out",    out.string(), "--threads", threads};
  std::vector<char *> argv;
  for (auto &a : args) argv.push_back(a.data());
  std::ostringstream sink;
  return cli::run(static_cast<int>(argv.size()), argv.data(), sink, std::cerr);
}

verify::CheckResult determinism() {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = fs::temp_directory_path() / "hullwalk_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path config = dir / "run.ini";
  std::ofstream(config) << "[model]\nname = spacetime_pm1\n\n[run]\nn_grid = 100, 1000, 5000\n"
                           "replicas = 3000\nseed = 987654321\n\n[outputs]\n"
                           "metrics = perimeter, area\nmax_norm_p = 2\nks_reference = true\n";
  const int c1 = simulate(config, dir / "t1", "1");
  const int c8 = simulate(config, dir / "t8", "8");
  const std::string a = slurp(dir / "t1" / "simulate.csv");
  const std::string b = slurp(dir / "t8" / "simulate.csv");
  const bool ok = c1 == 0 && c8 == 0 && !a.empty() && a == b;
  std::ostringstream os;
  os << "simulate CSV at --threads 1 and --threads 8: " << a.size() << " vs " << b.size()
     << " bytes, " << (a == b ? "identical" : "DIFFERENT");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {"determinism", ok, os.str(), secs};
}

} // namespace

int main() {
  using Criterion = std::function<verify::CheckResult()>;
  std::unique_ptr<verify::LimitsData> limits;
  const auto data = [&]() -> const verify::LimitsData & {
    if (!limits) limits = std::make_unique<verify::LimitsData>(verify::compute_limits_data(0));
    return *limits;
  };

  const std::vector<Criterion> criteria{
      [] { return verify::check_hull_oracle(1000, 101); },
      [] {
        return both("integral_geometry", verify::check_cauchy_identity(1000, 102),
                    verify::check_steiner(100, 103));
      },
      [] {
        return both("hull_inequalities", verify::check_path_hull_contraction(1000, 104),
                    verify::check_functional_continuity(1000, 105));
      },
      [] {
        return both("exact_formulas", verify::check_oracle_equivalence(6),
                    verify::check_mc_against_exact(10, 1'000'000, 201, 0));
      },
      [] { return verify::check_rounded_bounds(); },
      [&] { return verify::check_mean_asymptotics(data()); },
      [&] { return verify::check_variance_constants(data()); },
      [&] { return verify::check_brownian_reference(data()); },
      [&] { return verify::check_distributional_limits(data()); },
      [&] { return verify::check_snyder_steele(data()); },
      [] { return verify::check_moment_slopes(0); },
      [] { return determinism(); },
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    verify::CheckResult r;
    try {
      r = criteria[i]();
    } catch (const std::exception &e) {
      r = {"criterion", false, std::string("exception: ") + e.what(), 0.0};
    }
    failed += !r.passed;
    std::printf("%s %2zu %s (%.2f s): %s\n", r.passed ? "PASS" : "FAIL", i + 1, r.name.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hullwalk/exact_oracles.hpp"
#include "hullwalk/walk_models.hpp"

namespace hullwalk {

struct OutputSelection {
  bool perimeter = true;
  bool area = true;
  std::optional<double> max_norm_p; // record max_{m<=n} |S_m|^p
};

struct ExperimentConfig {
  IncrementModel model = IncrementModel::builtin("ssrw_z2");
  std::size_t n = 1;
  std::size_t replicas = 2;
  std::uint64_t master_seed = 0;
  OutputSelection outputs;
  std::vector<std::size_t> n_grid; // convergence curve lengths; empty: just n
  bool ks_reference = false;
  unsigned threads = 0;            // 0: all available cores
  std::size_t memory_cap_bytes = std::size_t{4} << 30;

  /// Throws InputError on n < 1, replicas < 2 or an invalid output request.
  void validate() const;
};

/// Walks at most this long are stored in full; longer ones are generated in
/// chunks whose hulls are merged.
inline constexpr std::size_t kFullStorageLimit = 1'000'000;
inline constexpr std::size_t kChunkSteps = 100'000;

/// Per-replica values, indexed by replica.
struct ReplicaSamples {
  std::vector<double> perimeter;
  std::vector<double> area;
  std::vector<double> max_norm;
};

/// Mean and unbiased variance of one output with 95% normal-approximation
/// half-widths; the variance half-width uses the fourth central moment.
struct MetricSummary {
  std::string name;
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double mean_ci = 0.0;
  double variance_ci = 0.0;
};

MetricSummary summarize_metric(std::string name, std::span<const double> values);

/// An estimate of a scaled limit, n^{-exponent} * raw / normalizer.
struct ScaledConstant {
  std::string name;   // e.g. "mean_L", "u0", "v0", "vplus"
  std::string source; // "mean_L", "var_L", "mean_A" or "var_A"
  double exponent = 0.0;
  double normalizer = 1.0;
  double estimate = 0.0;
  double ci_half_width = 0.0;
  std::optional<double> target;
  bool target_exact = true;
};

struct EstimatorReport {
  std::string model_name;
  std::size_t n = 0;
  std::size_t replicas = 0;
  std::uint64_t master_seed = 0;
  WalkStats stats;
  std::vector<MetricSummary> metrics;  // "L", "A", "max_norm_p"
  std::vector<ScaledConstant> scaled;
  double wall_seconds = 0.0;
  unsigned threads = 1;

  const MetricSummary *metric(const std::string &name) const;
  const ScaledConstant *constant(const std::string &name) const;
};

/// Worker count actually used for a requested count (0 = all cores).
unsigned resolve_threads(unsigned requested);

/// Runs config.replicas independent walks of length config.n. Replica r uses
/// RandomStream(master_seed, r), so results do not depend on thread count.
/// Throws ResourceError when the estimated footprint exceeds the memory cap.
ReplicaSamples simulate_replicas(const ExperimentConfig &config);

EstimatorReport summarize(const ExperimentConfig &config, const ReplicaSamples &samples);

EstimatorReport run_experiment(const ExperimentConfig &config);

/// Sorted real sample.
class Sample {
public:
  Sample() = default;
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double mean() const;

private:
  std::vector<double> values_;
};

enum class ReferenceKind { ell1, a1, atilde1 };

ReferenceKind parse_reference_kind(const std::string &name);
const char *to_string(ReferenceKind kind);

/// Samples of a fine random walk approximating a Brownian hull functional:
/// m^{-1/2} L_m (ell1) or m^{-1} A_m (a1) of the N(0, I) walk, and
/// m^{-3/2} A_m (atilde1) of the standard space-time gaussian walk.
Sample brownian_reference(std::size_t m, std::size_t replicas, ReferenceKind kind,
                          std::uint64_t master_seed, unsigned threads = 0);

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
double ks_distance(const Sample &a, const Sample &b);

enum class MomentTarget { automatic, norm, drift_projection };

struct MomentGrowth {
  double p = 2.0;
  MomentTarget target = MomentTarget::norm;
  std::vector<std::size_t> n_grid;
  std::vector<double> means; // E max_{m<=n} |.|^p per grid length
  bool degenerate = false;   // some mean is zero; slope undefined
  double slope = 0.0;
  double slope_se = 0.0;
};

/// Least-squares slope of log E[max_{m<=n} |S_m|^p] (norm) or
/// log E[max_{m<=n} |S_m . mu_hat|^p] (drift projection) against log n.
/// automatic picks the norm for zero drift and the projection otherwise.
/// Throws InputError for p not in {2, 4} or a grid that is not geometric
/// with at least 4 points.
MomentGrowth moment_growth_diagnostic(const IncrementModel &model, double p,
                                      std::span<const std::size_t> n_grid, std::size_t replicas,
                                      std::uint64_t master_seed,
                                      MomentTarget target = MomentTarget::automatic,
                                      unsigned threads = 0);

struct SnyderSteeleResult {
  bool passed = false;
  double scaled_variance = 0.0; // n^{-1} Var L_n estimate
  double bound = 0.0;           // pi^2 sigma^2 / 2
  double tolerance = 0.0;       // 3 variance-CI half-widths, scaled
  double slack = 0.0;           // bound + tolerance - scaled_variance
};

/// n^{-1} Var L_n <= pi^2 sigma^2 / 2, allowing 3 CI half-widths.
SnyderSteeleResult snyder_steele_check(const EstimatorReport &report, const WalkStats &stats);

} // namespace hullwalk

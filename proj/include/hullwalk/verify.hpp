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

#include "hullwalk/montecarlo.hpp"
#include "hullwalk/vec2.hpp"
#include "hullwalk/walk_models.hpp"

/// Independent oracles and the property/acceptance checks built on them.
/// Nothing here is used by the estimation code paths it verifies.
namespace hullwalk::verify {

/// Extreme points by exhaustive search: a point is a vertex iff it lies in
/// no closed triangle or segment spanned by other (distinct) points.
/// Returned in lexicographic order.
std::vector<Vec2> brute_force_hull_vertices(std::span<const Vec2> points);

/// Hull vertices in lexicographic order (for set comparison).
std::vector<Vec2> sorted_vertices(const ConvexPolygon &p);

struct EnumeratedExpectations {
  double expected_perimeter = 0.0;
  double expected_area = 0.0;
  std::size_t paths = 0;
};

/// E L_n and E A_n by building the hull of every one of the |atoms|^n paths.
EnumeratedExpectations enumerate_paths(std::span<const Atom> atoms, std::size_t n);

std::vector<Vec2> random_lattice_points(RandomStream &rng, std::size_t count, int half_width);
std::vector<Vec2> random_float_points(RandomStream &rng, std::size_t count, double half_width);

/// A random walk path of `steps` gaussian steps, as a point list from the origin.
std::vector<Vec2> random_walk_points(RandomStream &rng, std::size_t steps);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail; // measured values, or the counterexample on failure
  double seconds = 0.0;
};

// Geometry (fast).
CheckResult check_hull_oracle(std::size_t cases, std::uint64_t seed);
CheckResult check_cauchy_identity(std::size_t cases, std::uint64_t seed);
CheckResult check_steiner(std::size_t cases, std::uint64_t seed);
CheckResult check_path_hull_contraction(std::size_t cases, std::uint64_t seed);
CheckResult check_functional_continuity(std::size_t cases, std::uint64_t seed);
CheckResult check_affine_equivariance(std::size_t cases, std::uint64_t seed);
CheckResult check_monotonicity(std::size_t cases, std::uint64_t seed);

// Exact formulas.
CheckResult check_oracle_equivalence(std::size_t max_n);
CheckResult check_mc_against_exact(std::size_t n, std::size_t replicas, std::uint64_t seed,
                                   unsigned threads);
CheckResult check_rounded_bounds();

/// Shared simulation output for the limit checks, computed once.
struct LimitsData {
  EstimatorReport ssrw_mean, spacetime_mean, lazy_mean; // n = 10^4, R = 10^4
  ReplicaSamples ssrw_samples, spacetime_samples;
  EstimatorReport ssrw_var, spacetime_var;              // n = 2 x 10^4, R = 2 x 10^4
  Sample ell1, a1, atilde1;                             // m = 10^4, R = 10^4
  std::vector<EstimatorReport> extra_reports;           // more (model, n) pairs for Snyder-Steele
};

LimitsData compute_limits_data(unsigned threads);

CheckResult check_mean_asymptotics(const LimitsData &d);
CheckResult check_variance_constants(const LimitsData &d);
CheckResult check_brownian_reference(const LimitsData &d);
CheckResult check_distributional_limits(const LimitsData &d);
CheckResult check_snyder_steele(const LimitsData &d);
CheckResult check_moment_slopes(unsigned threads);

std::vector<std::string> suite_names();

/// Runs a named suite ("geometry", "oracles", "limits"). Throws InputError
/// for an unknown name.
std::vector<CheckResult> run_suite(const std::string &name, unsigned threads);

} // namespace hullwalk::verify

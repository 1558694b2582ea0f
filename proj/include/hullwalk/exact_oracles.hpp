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

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hullwalk/vec2.hpp"
#include "hullwalk/walk_models.hpp"

namespace hullwalk {

/// Closed-form constants of the Brownian scaling limits.
struct LimitConstants {
  double E_ell1 = 0.0;               // E perimeter of the planar Brownian hull, sqrt(8 pi)
  double E_a1 = 0.0;                 // E area of the planar Brownian hull, pi / 2
  double E_atilde1 = 0.0;            // E area of the space-time Brownian hull, sqrt(2 pi) / 3
  double var_bridge_perimeter = 0.0; // Var perimeter of the planar Brownian bridge hull
};

LimitConstants limit_constants();

/// Simulation estimates of the limiting variance constants, reported next to
/// bounds and this engine's own estimates (10^5 walks of length 10^5).
struct ReferenceEstimates {
  static constexpr double u0_identity = 1.08;
  static constexpr double v0 = 0.30;
  static constexpr double vplus = 0.019;
};

/// Si(x) = integral of sin(t)/t over [0, x], by its Taylor series (|x| <= 8).
double sine_integral(double x);

/// E L_n = 2 sum_{k=1}^n E|S_k| / k from the sequence E|S_1|, ..., E|S_n|.
double spitzer_widom_EL(std::span<const double> expected_norms);

/// Triangle area with sides u, v and u + v.
inline double triangle_area(const Vec2 &u, const Vec2 &v) { return 0.5 * std::fabs(cross(u, v)); }

/// Default caps on the support points stored over all S_k laws, and on the
/// pair work of the area sum.
inline constexpr std::size_t kEnumerationStateLimit = 10'000'000;
inline constexpr double kEnumerationWorkLimit = 1e9;

/// Exact laws of S_0, ..., S_kmax for a finitely supported step law, built
/// by repeated convolution with the atom list. Support points reached by
/// different step orders are merged when their coordinates coincide.
class AtomConvolution {
public:
  using Law = std::vector<std::pair<Vec2, double>>;

  /// Throws ResourceError("enumeration too large") when the tables together
  /// would hold state_limit support points or more.
  AtomConvolution(std::span<const Atom> atoms, std::size_t k_max,
                  std::size_t state_limit = kEnumerationStateLimit);

  std::size_t k_max() const { return laws_.size() - 1; }
  const Law &law(std::size_t k) const { return laws_.at(k); }
  double expected_norm(std::size_t k) const;
  std::size_t largest_table() const;

private:
  std::vector<Law> laws_;
};

double expected_norm_atoms(const IncrementModel &model, std::size_t k);

/// E|S_k| for S_k ~ N(0, k Sigma): sqrt(k) (8 pi)^{-1/2} times the integral of
/// |Sigma^{1/2} e| over the unit circle (adaptive Simpson, tolerance 1e-10).
double expected_norm_gaussian(const Mat2 &sigma, std::size_t k);

/// E|S_k| for the space-time walk with standard normal vertical steps,
/// S_k = (k, sqrt(k) xi).
double expected_norm_spacetime_gauss(std::size_t k);

/// E|S_k| for any model with an exact route (atoms, zero-mean gaussian,
/// space-time with standard normal vertical law).
double expected_norm(const IncrementModel &model, std::size_t k);

/// Expected hull area from sum_{k=2}^n sum_{m=1}^{k-1} E T(S_m, S_k - S_m) / (m (k - m)).
/// Atom laws are enumerated; the zero-mean gaussian and the standard
/// space-time gaussian walks use their closed forms.
double bnb_EA(const IncrementModel &model, std::size_t n);

struct ExactExpectations {
  std::size_t n = 0;
  double expected_perimeter = 0.0;
  double expected_area = 0.0;
  std::size_t enumeration_depth = 0;  // steps enumerated (0 for closed forms)
  std::size_t largest_table = 0;      // support points of the largest S_k law
};

/// E L_n and E A_n together, sharing one set of convolution tables.
ExactExpectations exact_expectations(const IncrementModel &model, std::size_t n);

/// A predicted limit of n^{-exponent} times a mean or variance.
struct PredictedLimit {
  std::string quantity; // "mean_L", "var_L", "mean_A", "var_A"
  double exponent = 0.0;
  std::optional<double> value;     // limit, when computable
  bool exact = true;               // false: value carries a simulation reference
  std::string expression;
};

struct AsymptoticPredictions {
  bool zero_drift = true;
  std::vector<PredictedLimit> limits;

  const PredictedLimit &get(const std::string &quantity) const;
};

AsymptoticPredictions asymptotic_predictions(const WalkStats &stats);

/// Rigorous bounds on the limiting variance constants.
struct BoundsReport {
  double trace_sigma = 0.0;
  double u0_lower = 0.0;
  double u0_upper = 0.0;
  double u0_identity_lower = 0.0; // sharper lower bound valid for Sigma = I
  double v0_lower = 0.0;
  double v0_upper = 0.0;
  double vplus_lower = 0.0;
  double vplus_upper = 0.0;
};

BoundsReport variance_bounds(const Mat2 &sigma);
BoundsReport variance_bounds_for_trace(double trace_sigma);

/// sum_{m=1}^{k-1} m^{-1/2} (k - m)^{-1/2}, which tends to pi.
double pi_sum_check(std::size_t k);

/// Rounds to `digits` significant digits towards -infinity / +infinity.
double round_sig_down(double x, int digits);
double round_sig_up(double x, int digits);

} // namespace hullwalk

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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hullwalk/geometry.hpp"
#include "hullwalk/rng.hpp"
#include "hullwalk/vec2.hpp"

namespace hullwalk {

struct Atom {
  double probability = 0.0;
  Vec2 value;
};

/// Finitely supported step law.
struct AtomsLaw {
  std::vector<Atom> atoms;
};

/// Bivariate normal step law N(mean, covariance).
struct GaussianLaw {
  Vec2 mean;
  Mat2 covariance;
};

/// One-dimensional law used for the vertical part of a space-time step.
struct ScalarAtom {
  double probability = 0.0;
  double value = 0.0;
};
struct ScalarNormal {
  double mean = 0.0;
  double stddev = 1.0;
};
using ScalarLaw = std::variant<std::vector<ScalarAtom>, ScalarNormal>;

/// Space-time step Z = (1, xi): the walk's x coordinate is the time index.
struct SpaceTimeLaw {
  ScalarLaw vertical;
};

/// Law of the i.i.d. increments Z of the walk.
class IncrementModel {
public:
  using Law = std::variant<AtomsLaw, GaussianLaw, SpaceTimeLaw>;

  /// Validates the law: probabilities positive and summing to 1 within
  /// 1e-12, covariance symmetric PSD, all values finite.
  IncrementModel(std::string name, Law law);

  static IncrementModel atoms(std::string name, std::vector<Atom> atoms);
  static IncrementModel gaussian(std::string name, Vec2 mean, Mat2 covariance);
  static IncrementModel spacetime(std::string name, ScalarLaw vertical);

  /// Built-ins: ssrw_z2, spacetime_pm1, lazy_right, spacetime_gauss,
  /// gaussian_std (N(0, I)). Throws InputError on an unknown name.
  static IncrementModel builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  const std::string &name() const { return name_; }
  const Law &law() const { return law_; }
  bool is_atoms() const { return std::holds_alternative<AtomsLaw>(law_); }

  /// The law as a planar atom list, when it is finitely supported (atoms, or
  /// space-time with an atomic vertical law).
  std::optional<std::vector<Atom>> planar_atoms() const;

private:
  std::string name_;
  Law law_;
};

/// Moments of the step law.
struct WalkStats {
  Vec2 mu;
  Mat2 sigma_mat;
  double sigma2 = 0.0;     // trace of the covariance
  Mat2 sqrt_sigma;
  double lambda_max = 0.0; // principal eigenvalue of the covariance
  Vec2 principal_axis;     // unit eigenvector for lambda_max

  // Present only when mu != 0.
  std::optional<Vec2> mu_hat;
  std::optional<Vec2> mu_hat_perp; // mu_hat rotated by +pi/2
  std::optional<double> sigma2_mu;   // E[((Z - mu) . mu_hat)^2]
  std::optional<double> sigma2_perp; // E[((Z - mu) . mu_hat_perp)^2]

  bool zero_drift() const { return !mu_hat.has_value(); }
};

WalkStats increment_stats(const IncrementModel &model);

struct SymmetricEigen {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  Vec2 axis_max; // unit eigenvector for lambda_max
};

/// Closed-form eigendecomposition of a symmetric 2x2 matrix.
SymmetricEigen symmetric_eigen(const Mat2 &m);

/// PSD square root by 2x2 spectral decomposition. Eigenvalues down to -1e-12
/// are clamped to zero; anything more negative, or asymmetry beyond 1e-12,
/// throws InputError.
Mat2 matrix_sqrt(const Mat2 &sigma);

/// Draws increments of one model from a stream.
class IncrementSampler {
public:
  explicit IncrementSampler(const IncrementModel &model);

  Vec2 next(RandomStream &rng);

private:
  enum class Kind { atoms, gaussian, spacetime_atoms, spacetime_normal };

  double pick_scalar(RandomStream &rng) const;
  std::size_t pick_index(double u) const;

  Kind kind_;
  std::vector<double> cumulative_;
  std::vector<Vec2> values_;
  std::vector<double> scalar_values_;
  Vec2 mean_;
  Mat2 root_;
  ScalarNormal vertical_normal_;
};

/// Partial sums S_0 = 0, S_1, ..., S_n.
struct PathSample {
  std::vector<Vec2> points;
  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }
};

PathSample sample_path(const IncrementModel &model, std::size_t n, RandomStream &rng);

/// Interpolating path t -> S_{floor(nt)} + (nt - floor(nt)) Z_{floor(nt)+1}.
PolyPath interpolated_path(const PathSample &path);

/// Every vertex multiplied by n^{-1/2}.
ConvexPolygon scale_zero_drift(const ConvexPolygon &p, std::size_t n);

/// x -> (x . mu_hat / (n |mu|), x . mu_hat_perp / sqrt(n sigma2_perp)).
/// Throws InputError("scaling undefined") when mu = 0 or sigma2_perp = 0.
ConvexPolygon scale_drift(const ConvexPolygon &p, std::size_t n, const WalkStats &stats);

/// The drift scaling applied to a single point.
Vec2 drift_scaling_map(const Vec2 &x, std::size_t n, const WalkStats &stats);

} // namespace hullwalk

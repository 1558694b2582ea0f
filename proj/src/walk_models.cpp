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

#include "hullwalk/walk_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hullwalk/error.hpp"

namespace hullwalk {

namespace {

constexpr double kProbabilityTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;

void check_probabilities(const std::vector<double> &probs) {
  if (probs.empty()) {
    throw InputError("law has no atoms");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw InputError("atom probabilities must be positive");
    }
    total += p;
  }
  if (std::fabs(total - 1.0) > kProbabilityTolerance) {
    std::ostringstream msg;
    msg << "atom probabilities sum to " << total << ", not 1";
    throw InputError(msg.str());
  }
}

void check_covariance(const Mat2 &m) {
  if (!std::isfinite(m.a) || !std::isfinite(m.b) || !std::isfinite(m.c) ||
      !std::isfinite(m.d)) {
    throw InputError("non-finite covariance");
  }
  // matrix_sqrt performs the symmetry and PSD checks.
  (void)matrix_sqrt(m);
}

struct ScalarMoments {
  double mean = 0.0;
  double variance = 0.0;
};

ScalarMoments scalar_moments(const ScalarLaw &law) {
  if (const auto *normal = std::get_if<ScalarNormal>(&law)) {
    return {normal->mean, normal->stddev * normal->stddev};
  }
  const auto &atoms = std::get<std::vector<ScalarAtom>>(law);
  ScalarMoments m;
  for (const auto &a : atoms) {
    m.mean += a.probability * a.value;
  }
  for (const auto &a : atoms) {
    m.variance += a.probability * (a.value - m.mean) * (a.value - m.mean);
  }
  return m;
}

} // namespace

IncrementModel::IncrementModel(std::string name, Law law)
    : name_(std::move(name)), law_(std::move(law)) {
  if (const auto *atoms = std::get_if<AtomsLaw>(&law_)) {
    std::vector<double> probs;
    for (const Atom &a : atoms->atoms) {
      if (!is_finite(a.value)) {
        throw InputError("non-finite atom value");
      }
      probs.push_back(a.probability);
    }
    check_probabilities(probs);
  } else if (const auto *g = std::get_if<GaussianLaw>(&law_)) {
    if (!is_finite(g->mean)) {
      throw InputError("non-finite gaussian mean");
    }
    check_covariance(g->covariance);
  } else {
    const auto &vertical = std::get<SpaceTimeLaw>(law_).vertical;
    if (const auto *normal = std::get_if<ScalarNormal>(&vertical)) {
      if (!std::isfinite(normal->mean) || !(normal->stddev >= 0.0) ||
          !std::isfinite(normal->stddev)) {
        throw InputError("invalid vertical normal law");
      }
    } else {
      std::vector<double> probs;
      for (const auto &a : std::get<std::vector<ScalarAtom>>(vertical)) {
        if (!std::isfinite(a.value)) {
          throw InputError("non-finite atom value");
        }
        probs.push_back(a.probability);
      }
      check_probabilities(probs);
    }
  }
}

IncrementModel IncrementModel::atoms(std::string name, std::vector<Atom> atoms) {
  return IncrementModel(std::move(name), AtomsLaw{std::move(atoms)});
}

IncrementModel IncrementModel::gaussian(std::string name, Vec2 mean, Mat2 covariance) {
  return IncrementModel(std::move(name), GaussianLaw{mean, covariance});
}

IncrementModel IncrementModel::spacetime(std::string name, ScalarLaw vertical) {
  return IncrementModel(std::move(name), SpaceTimeLaw{std::move(vertical)});
}

IncrementModel IncrementModel::builtin(std::string_view name) {
  if (name == "ssrw_z2") {
    return atoms("ssrw_z2", {{0.25, {1, 1}}, {0.25, {-1, -1}}, {0.25, {-1, 1}}, {0.25, {1, -1}}});
  }
  if (name == "spacetime_pm1") {
    return atoms("spacetime_pm1", {{0.5, {1, 1}}, {0.5, {1, -1}}});
  }
  if (name == "lazy_right") {
    return atoms("lazy_right", {{0.5, {2, 0}}, {0.5, {0, 0}}});
  }
  if (name == "spacetime_gauss") {
    return spacetime("spacetime_gauss", ScalarNormal{0.0, 1.0});
  }
  if (name == "gaussian_std") {
    return gaussian("gaussian_std", {0.0, 0.0}, Mat2::identity());
  }
  throw InputError("unknown built-in model '" + std::string(name) + "'");
}

std::vector<std::string> IncrementModel::builtin_names() {
  return {"ssrw_z2", "spacetime_pm1", "lazy_right", "spacetime_gauss", "gaussian_std"};
}

std::optional<std::vector<Atom>> IncrementModel::planar_atoms() const {
  if (const auto *atoms = std::get_if<AtomsLaw>(&law_)) {
    return atoms->atoms;
  }
  if (const auto *st = std::get_if<SpaceTimeLaw>(&law_)) {
    if (const auto *scalar = std::get_if<std::vector<ScalarAtom>>(&st->vertical)) {
      std::vector<Atom> out;
      for (const auto &a : *scalar) {
        out.push_back({a.probability, {1.0, a.value}});
      }
      return out;
    }
  }
  return std::nullopt;
}

SymmetricEigen symmetric_eigen(const Mat2 &m) {
  const double half_trace = 0.5 * (m.a + m.d);
  const double half_gap = 0.5 * (m.a - m.d);
  const double off = 0.5 * (m.b + m.c);
  const double radius = std::hypot(half_gap, off);
  SymmetricEigen e;
  e.lambda_max = half_trace + radius;
  e.lambda_min = half_trace - radius;
  if (radius == 0.0) {
    e.axis_max = {1.0, 0.0};
  } else {
    // Eigenvector angle: tan(2 phi) = 2 off / (a - d).
    const double phi = 0.5 * std::atan2(off, half_gap);
    e.axis_max = {std::cos(phi), std::sin(phi)};
  }
  return e;
}

Mat2 matrix_sqrt(const Mat2 &sigma) {
  const double scale = std::max({std::fabs(sigma.a), std::fabs(sigma.d), 1.0});
  if (std::fabs(sigma.b - sigma.c) > kSymmetryTolerance * scale) {
    throw InputError("covariance matrix is not symmetric");
  }
  const SymmetricEigen e = symmetric_eigen(sigma);
  if (e.lambda_min < -kSymmetryTolerance * scale) {
    throw InputError("covariance matrix is not positive semidefinite");
  }
  const double r1 = std::sqrt(std::max(e.lambda_max, 0.0));
  const double r2 = std::sqrt(std::max(e.lambda_min, 0.0));
  const Vec2 u = e.axis_max;
  const Vec2 w = perp(u);
  return {r1 * u.x * u.x + r2 * w.x * w.x, r1 * u.x * u.y + r2 * w.x * w.y,
          r1 * u.x * u.y + r2 * w.x * w.y, r1 * u.y * u.y + r2 * w.y * w.y};
}

WalkStats increment_stats(const IncrementModel &model) {
  WalkStats s;
  std::optional<std::vector<Atom>> atoms = model.planar_atoms();
  if (atoms) {
    for (const Atom &a : *atoms) {
      s.mu += a.probability * a.value;
    }
    for (const Atom &a : *atoms) {
      const Vec2 c = a.value - s.mu;
      s.sigma_mat.a += a.probability * c.x * c.x;
      s.sigma_mat.b += a.probability * c.x * c.y;
      s.sigma_mat.d += a.probability * c.y * c.y;
    }
    s.sigma_mat.c = s.sigma_mat.b;
  } else if (const auto *g = std::get_if<GaussianLaw>(&model.law())) {
    s.mu = g->mean;
    s.sigma_mat = g->covariance;
  } else {
    const auto m = scalar_moments(std::get<SpaceTimeLaw>(model.law()).vertical);
    s.mu = {1.0, m.mean};
    s.sigma_mat = Mat2::diag(0.0, m.variance);
  }
  s.sigma2 = s.sigma_mat.trace();
  s.sqrt_sigma = matrix_sqrt(s.sigma_mat);
  const SymmetricEigen e = symmetric_eigen(s.sigma_mat);
  s.lambda_max = e.lambda_max;
  s.principal_axis = e.axis_max;

  if (s.mu != Vec2{}) {
    const Vec2 hat = (1.0 / norm(s.mu)) * s.mu;
    const Vec2 hat_perp = perp(hat);
    s.mu_hat = hat;
    s.mu_hat_perp = hat_perp;
    if (atoms) {
      double along = 0.0, across = 0.0;
      for (const Atom &a : *atoms) {
        const Vec2 c = a.value - s.mu;
        along += a.probability * dot(c, hat) * dot(c, hat);
        across += a.probability * dot(c, hat_perp) * dot(c, hat_perp);
      }
      s.sigma2_mu = along;
      s.sigma2_perp = across;
    } else {
      s.sigma2_mu = dot(hat, s.sigma_mat * hat);
      s.sigma2_perp = dot(hat_perp, s.sigma_mat * hat_perp);
    }
  }
  return s;
}

IncrementSampler::IncrementSampler(const IncrementModel &model) {
  const auto build_cumulative = [this](const std::vector<double> &probs) {
    double acc = 0.0;
    for (double p : probs) {
      acc += p;
      cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
  };
  if (const auto *atoms = std::get_if<AtomsLaw>(&model.law())) {
    kind_ = Kind::atoms;
    std::vector<double> probs;
    for (const Atom &a : atoms->atoms) {
      probs.push_back(a.probability);
      values_.push_back(a.value);
    }
    build_cumulative(probs);
  } else if (const auto *g = std::get_if<GaussianLaw>(&model.law())) {
    kind_ = Kind::gaussian;
    mean_ = g->mean;
    root_ = matrix_sqrt(g->covariance);
  } else {
    const auto &vertical = std::get<SpaceTimeLaw>(model.law()).vertical;
    if (const auto *normal = std::get_if<ScalarNormal>(&vertical)) {
      kind_ = Kind::spacetime_normal;
      vertical_normal_ = *normal;
    } else {
      kind_ = Kind::spacetime_atoms;
      std::vector<double> probs;
      for (const auto &a : std::get<std::vector<ScalarAtom>>(vertical)) {
        probs.push_back(a.probability);
        scalar_values_.push_back(a.value);
      }
      build_cumulative(probs);
    }
  }
}

std::size_t IncrementSampler::pick_index(double u) const {
  if (cumulative_.size() <= 8) {
    std::size_t i = 0;
    while (u >= cumulative_[i]) {
      ++i;
    }
    return i;
  }
  return static_cast<std::size_t>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

Vec2 IncrementSampler::next(RandomStream &rng) {
  switch (kind_) {
  case Kind::atoms:
    return values_[pick_index(rng.uniform())];
  case Kind::gaussian: {
    double z0, z1;
    rng.normal_pair(z0, z1);
    return mean_ + root_ * Vec2{z0, z1};
  }
  case Kind::spacetime_atoms:
    return {1.0, scalar_values_[pick_index(rng.uniform())]};
  case Kind::spacetime_normal:
    return {1.0, vertical_normal_.mean + vertical_normal_.stddev * rng.normal()};
  }
  return {};
}

PathSample sample_path(const IncrementModel &model, std::size_t n, RandomStream &rng) {
  if (n == 0) {
    throw InputError("path needs at least one step");
  }
  IncrementSampler sampler(model);
  PathSample path;
  path.points.resize(n + 1);
  Vec2 s;
  path.points[0] = s;
  for (std::size_t k = 1; k <= n; ++k) {
    s += sampler.next(rng);
    path.points[k] = s;
  }
  return path;
}

PolyPath interpolated_path(const PathSample &path) { return PolyPath(path.points); }

ConvexPolygon scale_zero_drift(const ConvexPolygon &p, std::size_t n) {
  if (n == 0) {
    throw InputError("scaling needs n >= 1");
  }
  const double f = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (const Vec2 &v : p.vertices()) {
    out.push_back(f * v);
  }
  return ConvexPolygon::from_ccw_vertices(std::move(out));
}

Vec2 drift_scaling_map(const Vec2 &x, std::size_t n, const WalkStats &stats) {
  if (stats.zero_drift() || !(*stats.sigma2_perp > 0.0)) {
    throw InputError("scaling undefined");
  }
  if (n == 0) {
    throw InputError("scaling needs n >= 1");
  }
  const double nn = static_cast<double>(n);
  return {dot(x, *stats.mu_hat) / (nn * norm(stats.mu)),
          dot(x, *stats.mu_hat_perp) / std::sqrt(nn * *stats.sigma2_perp)};
}

ConvexPolygon scale_drift(const ConvexPolygon &p, std::size_t n, const WalkStats &stats) {
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (const Vec2 &v : p.vertices()) {
    out.push_back(drift_scaling_map(v, n, stats));
  }
  if (p.empty()) {
    (void)drift_scaling_map({}, n, stats); // still reject undefined scalings
  }
  return ConvexPolygon::from_ccw_vertices(std::move(out));
}

} // namespace hullwalk

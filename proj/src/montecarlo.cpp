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

#include "hullwalk/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "hullwalk/error.hpp"
#include "hullwalk/geometry.hpp"
#include "parallel.hpp"

namespace hullwalk {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct ReplicaResult {
  double perimeter = 0.0;
  double area = 0.0;
  double max_norm2 = 0.0;
};

// Per-worker scratch space reused across replicas.
struct WalkBuffer {
  std::vector<Vec2> points;
};

ReplicaResult run_replica(const IncrementModel &model, std::size_t n, std::uint64_t seed,
                          std::uint64_t replica, WalkBuffer &buf) {
  RandomStream rng(seed, replica);
  IncrementSampler sampler(model);
  ReplicaResult out;
  Vec2 s;
  ConvexPolygon hull;
  std::size_t done = 0;
  const std::size_t chunk = n <= kFullStorageLimit ? n : kChunkSteps;
  while (done < n) {
    const std::size_t steps = std::min(chunk, n - done);
    buf.points.resize(steps + 1);
    buf.points[0] = s; // chunks overlap in one point
    for (std::size_t k = 1; k <= steps; ++k) {
      s += sampler.next(rng);
      buf.points[k] = s;
      out.max_norm2 = std::max(out.max_norm2, norm2(s));
    }
    const ConvexPolygon part = walk_hull(buf.points);
    hull = done == 0 ? part : merge_hulls(hull, part);
    done += steps;
  }
  out.perimeter = perimeter(hull);
  out.area = area(hull);
  return out;
}

std::size_t footprint_bytes(const ExperimentConfig &c, unsigned threads) {
  const std::size_t stored = std::min(c.n, kFullStorageLimit) + 1;
  const std::size_t per_worker = 2 * stored * sizeof(Vec2);
  return threads * per_worker + c.replicas * (3 * sizeof(double) + sizeof(ReplicaResult));
}

} // namespace

void ExperimentConfig::validate() const {
  if (n < 1) {
    throw InputError("n must be at least 1");
  }
  if (replicas < 2) {
    throw InputError("need ≥ 2 replicas for variance");
  }
  if (outputs.max_norm_p && !(*outputs.max_norm_p > 0.0)) {
    throw InputError("max_norm_p exponent must be positive");
  }
  for (std::size_t len : n_grid) {
    if (len < 1) {
      throw InputError("n_grid lengths must be at least 1");
    }
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ReplicaSamples simulate_replicas(const ExperimentConfig &config) {
  config.validate();
  const unsigned threads = resolve_threads(config.threads);
  const std::size_t need = footprint_bytes(config, threads);
  if (need > config.memory_cap_bytes) {
    std::ostringstream msg;
    msg << "estimated memory " << need << " bytes exceeds cap " << config.memory_cap_bytes;
    throw ResourceError(msg.str());
  }

  std::vector<ReplicaResult> results(config.replicas);
  std::vector<WalkBuffer> buffers(threads);
  detail::parallel_for(config.replicas, threads, [&](unsigned worker, std::size_t r) {
    results[r] = run_replica(config.model, config.n, config.master_seed, r, buffers[worker]);
  });

  ReplicaSamples out;
  if (config.outputs.perimeter) {
    out.perimeter.reserve(config.replicas);
    for (const auto &r : results) out.perimeter.push_back(r.perimeter);
  }
  if (config.outputs.area) {
    out.area.reserve(config.replicas);
    for (const auto &r : results) out.area.push_back(r.area);
  }
  if (config.outputs.max_norm_p) {
    const double half_p = 0.5 * *config.outputs.max_norm_p;
    out.max_norm.reserve(config.replicas);
    for (const auto &r : results) out.max_norm.push_back(std::pow(r.max_norm2, half_p));
  }
  return out;
}

MetricSummary summarize_metric(std::string name, std::span<const double> values) {
  MetricSummary m;
  m.name = std::move(name);
  m.count = values.size();
  if (values.size() < 2) {
    throw InputError("need ≥ 2 replicas for variance");
  }
  const double r = static_cast<double>(values.size());
  m.mean = detail::pairwise_sum(values, 0, values.size()) / r;
  std::vector<double> sq(values.size()), quad(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - m.mean;
    sq[i] = d * d;
    quad[i] = sq[i] * sq[i];
  }
  const double m2 = detail::pairwise_sum(sq, 0, sq.size());
  const double m4 = detail::pairwise_sum(quad, 0, quad.size()) / r;
  m.variance = m2 / (r - 1.0);
  m.mean_ci = kZ95 * std::sqrt(m.variance / r);
  // Var(s^2) ~ (mu4 - sigma^4 (R - 3) / (R - 1)) / R
  const double var_of_var = (m4 - m.variance * m.variance * (r - 3.0) / (r - 1.0)) / r;
  m.variance_ci = kZ95 * std::sqrt(std::max(var_of_var, 0.0));
  return m;
}

const MetricSummary *EstimatorReport::metric(const std::string &name) const {
  for (const auto &m : metrics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const ScaledConstant *EstimatorReport::constant(const std::string &name) const {
  for (const auto &c : scaled) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

EstimatorReport summarize(const ExperimentConfig &config, const ReplicaSamples &samples) {
  EstimatorReport rep;
  rep.model_name = config.model.name();
  rep.n = config.n;
  rep.replicas = config.replicas;
  rep.master_seed = config.master_seed;
  rep.stats = increment_stats(config.model);
  rep.threads = resolve_threads(config.threads);

  if (!samples.perimeter.empty()) rep.metrics.push_back(summarize_metric("L", samples.perimeter));
  if (!samples.area.empty()) rep.metrics.push_back(summarize_metric("A", samples.area));
  if (!samples.max_norm.empty()) {
    std::ostringstream name;
    name << "max_norm_p" << *config.outputs.max_norm_p;
    rep.metrics.push_back(summarize_metric(name.str(), samples.max_norm));
  }

  const AsymptoticPredictions pred = asymptotic_predictions(rep.stats);
  const double nn = static_cast<double>(config.n);
  const auto add = [&](const std::string &name, const std::string &source, const MetricSummary *m,
                       bool use_variance, double normalizer) {
    if (m == nullptr) return;
    const PredictedLimit &limit = pred.get(source);
    ScaledConstant c;
    c.name = name;
    c.source = source;
    c.exponent = limit.exponent;
    c.normalizer = normalizer;
    const double factor = std::pow(nn, -limit.exponent) / normalizer;
    c.estimate = factor * (use_variance ? m->variance : m->mean);
    c.ci_half_width = factor * (use_variance ? m->variance_ci : m->mean_ci);
    if (limit.value) {
      c.target = *limit.value / normalizer;
    }
    c.target_exact = limit.exact;
    rep.scaled.push_back(c);
  };

  const MetricSummary *L = rep.metric("L");
  const MetricSummary *A = rep.metric("A");
  add("mean_L", "mean_L", L, false, 1.0);
  add("mean_A", "mean_A", A, false, 1.0);
  if (rep.stats.zero_drift()) {
    add("u0", "var_L", L, true, 1.0);
    const double det = rep.stats.sigma_mat.det();
    if (det > 0.0) {
      add("v0", "var_A", A, true, det);
    }
  } else {
    add("var_L", "var_L", L, true, 1.0);
    const double across = *rep.stats.sigma2_perp;
    const double speed2 = norm2(rep.stats.mu);
    if (across > 0.0) {
      add("vplus", "var_A", A, true, speed2 * across);
    }
  }
  return rep;
}

EstimatorReport run_experiment(const ExperimentConfig &config) {
  const auto start = std::chrono::steady_clock::now();
  const ReplicaSamples samples = simulate_replicas(config);
  EstimatorReport rep = summarize(config, samples);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double Sample::mean() const {
  if (values_.empty()) {
    throw InputError("empty sample");
  }
  return detail::pairwise_sum(values_, 0, values_.size()) / static_cast<double>(values_.size());
}

ReferenceKind parse_reference_kind(const std::string &name) {
  if (name == "ell1") return ReferenceKind::ell1;
  if (name == "a1") return ReferenceKind::a1;
  if (name == "atilde1") return ReferenceKind::atilde1;
  throw InputError("unknown reference kind '" + name + "' (expected ell1, a1 or atilde1)");
}

const char *to_string(ReferenceKind kind) {
  switch (kind) {
  case ReferenceKind::ell1:
    return "ell1";
  case ReferenceKind::a1:
    return "a1";
  case ReferenceKind::atilde1:
    return "atilde1";
  }
  return "unknown";
}

Sample brownian_reference(std::size_t m, std::size_t replicas, ReferenceKind kind,
                          std::uint64_t master_seed, unsigned threads) {
  if (m < 1000) {
    throw InputError("reference walks need at least 1000 steps");
  }
  ExperimentConfig config;
  config.model = IncrementModel::builtin(kind == ReferenceKind::atilde1 ? "spacetime_gauss"
                                                                        : "gaussian_std");
  config.n = m;
  config.replicas = replicas;
  config.master_seed = master_seed;
  config.threads = threads;
  config.outputs.perimeter = kind == ReferenceKind::ell1;
  config.outputs.area = kind != ReferenceKind::ell1;
  ReplicaSamples raw = simulate_replicas(config);

  const double mm = static_cast<double>(m);
  std::vector<double> values = kind == ReferenceKind::ell1 ? std::move(raw.perimeter)
                                                           : std::move(raw.area);
  const double scale = kind == ReferenceKind::ell1  ? 1.0 / std::sqrt(mm)
                       : kind == ReferenceKind::a1 ? 1.0 / mm
                                                   : std::pow(mm, -1.5);
  for (double &v : values) {
    v *= scale;
  }
  return Sample(std::move(values));
}

double ks_distance(const Sample &a, const Sample &b) {
  if (a.empty() || b.empty()) {
    throw InputError("empty sample");
  }
  const auto x = a.values();
  const auto y = b.values();
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

MomentGrowth moment_growth_diagnostic(const IncrementModel &model, double p,
                                      std::span<const std::size_t> n_grid, std::size_t replicas,
                                      std::uint64_t master_seed, MomentTarget target,
                                      unsigned threads) {
  if (p != 2.0 && p != 4.0) {
    throw InputError("moment exponent must be 2 or 4");
  }
  if (n_grid.size() < 4) {
    throw InputError("degenerate grid: need at least 4 lengths");
  }
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1] || n_grid[i - 1] == 0) {
      throw InputError("degenerate grid: lengths must be positive and increasing");
    }
  }
  const double mean_ratio =
      std::pow(static_cast<double>(n_grid.back()) / static_cast<double>(n_grid.front()),
               1.0 / static_cast<double>(n_grid.size() - 1));
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    const double ratio = static_cast<double>(n_grid[i]) / static_cast<double>(n_grid[i - 1]);
    if (std::fabs(ratio / mean_ratio - 1.0) > 0.05) {
      throw InputError("degenerate grid: lengths are not geometric");
    }
  }
  if (replicas < 2) {
    throw InputError("need >= 2 replicas");
  }

  const WalkStats stats = increment_stats(model);
  if (target == MomentTarget::automatic) {
    target = stats.zero_drift() ? MomentTarget::norm : MomentTarget::drift_projection;
  }
  if (target == MomentTarget::drift_projection && stats.zero_drift()) {
    throw InputError("drift projection needs a nonzero drift");
  }
  const Vec2 axis = stats.mu_hat.value_or(Vec2{1.0, 0.0});

  const std::size_t g = n_grid.size();
  const std::size_t longest = n_grid.back();
  std::vector<double> maxima(replicas * g);
  detail::parallel_for(replicas, resolve_threads(threads), [&](unsigned, std::size_t r) {
    RandomStream rng(master_seed, r);
    IncrementSampler sampler(model);
    Vec2 s;
    double best = 0.0;
    std::size_t next = 0;
    for (std::size_t k = 1; k <= longest; ++k) {
      s += sampler.next(rng);
      const double v = target == MomentTarget::norm ? norm2(s) : dot(s, axis) * dot(s, axis);
      best = std::max(best, v);
      if (k == n_grid[next]) {
        maxima[r * g + next] = std::pow(best, 0.5 * p);
        ++next;
      }
    }
  });

  MomentGrowth out;
  out.p = p;
  out.target = target;
  out.n_grid.assign(n_grid.begin(), n_grid.end());
  out.means.assign(g, 0.0);
  std::vector<double> column(replicas);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t r = 0; r < replicas; ++r) {
      column[r] = maxima[r * g + j];
    }
    out.means[j] = detail::pairwise_sum(column, 0, replicas) / static_cast<double>(replicas);
    if (!(out.means[j] > 0.0)) {
      out.degenerate = true;
    }
  }
  if (out.degenerate) {
    out.slope = std::nan("");
    out.slope_se = std::nan("");
    return out;
  }

  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(g), ly(g);
  for (std::size_t j = 0; j < g; ++j) {
    lx[j] = std::log(static_cast<double>(n_grid[j]));
    ly[j] = std::log(out.means[j]);
    sx += lx[j];
    sy += ly[j];
  }
  const double gx = sx / static_cast<double>(g), gy = sy / static_cast<double>(g);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    sxx += (lx[j] - gx) * (lx[j] - gx);
    sxy += (lx[j] - gx) * (ly[j] - gy);
  }
  out.slope = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    const double resid = ly[j] - gy - out.slope * (lx[j] - gx);
    ssr += resid * resid;
  }
  out.slope_se = std::sqrt(ssr / static_cast<double>(g - 2) / sxx);
  return out;
}

SnyderSteeleResult snyder_steele_check(const EstimatorReport &report, const WalkStats &stats) {
  const MetricSummary *L = report.metric("L");
  if (L == nullptr) {
    throw InputError("report has no perimeter variance");
  }
  const double nn = static_cast<double>(report.n);
  SnyderSteeleResult out;
  out.scaled_variance = L->variance / nn;
  out.bound = std::numbers::pi * std::numbers::pi * stats.sigma2 / 2.0;
  out.tolerance = 3.0 * L->variance_ci / nn;
  out.slack = out.bound + out.tolerance - out.scaled_variance;
  out.passed = out.slack >= 0.0;
  return out;
}

} // namespace hullwalk

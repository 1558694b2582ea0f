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

#include "hullwalk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "hullwalk/error.hpp"
#include "hullwalk/exact_oracles.hpp"
#include "hullwalk/geometry.hpp"

namespace hullwalk::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZ95 = 1.959963984540054;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(std::span<const Vec2> pts) {
  std::ostringstream os;
  os.precision(17);
  os << "points {";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? ", " : "") << "(" << pts[i].x << ", " << pts[i].y << ")";
  }
  os << "}";
  return os.str();
}

// p on the closed segment ab (a != b), exact for exactly representable input.
bool on_segment(const Vec2 &p, const Vec2 &a, const Vec2 &b) {
  if (orient(a, b, p) != 0.0) {
    return false;
  }
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool in_triangle(const Vec2 &p, const Vec2 &a, const Vec2 &b, const Vec2 &c) {
  const double d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

bool same_vertices(std::span<const Vec2> a, std::span<const Vec2> b, double tol) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i].x - b[i].x) > tol || std::fabs(a[i].y - b[i].y) > tol) {
      return false;
    }
  }
  return true;
}

std::size_t pick(RandomStream &rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.uniform() * static_cast<double>(hi - lo + 1));
}

CheckResult finish(std::string name, Clock::time_point start, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail), seconds_since(start)};
}

} // namespace

std::vector<Vec2> brute_force_hull_vertices(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Vec2> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        if (b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) {
          covered = true;
          break;
        }
        for (std::size_t c = b + 1; c < n; ++c) {
          if (c == i || orient(pts[a], pts[b], pts[c]) == 0.0) continue;
          if (in_triangle(pts[i], pts[a], pts[b], pts[c])) {
            covered = true;
            break;
          }
        }
      }
    }
    if (!covered) {
      out.push_back(pts[i]);
    }
  }
  return out;
}

std::vector<Vec2> sorted_vertices(const ConvexPolygon &p) {
  std::vector<Vec2> v(p.vertices().begin(), p.vertices().end());
  std::sort(v.begin(), v.end());
  return v;
}

EnumeratedExpectations enumerate_paths(std::span<const Atom> atoms, std::size_t n) {
  const std::size_t r = atoms.size();
  double total_paths = std::pow(static_cast<double>(r), static_cast<double>(n));
  if (total_paths > 1e7) {
    throw ResourceError("enumeration too large");
  }
  EnumeratedExpectations out;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Vec2> pts(n + 1);
  for (;;) {
    double weight = 1.0;
    Vec2 s;
    for (std::size_t k = 0; k < n; ++k) {
      weight *= atoms[digit[k]].probability;
      s += atoms[digit[k]].value;
      pts[k + 1] = s;
    }
    const ConvexPolygon hull = convex_hull(pts);
    out.expected_perimeter += weight * perimeter(hull);
    out.expected_area += weight * area(hull);
    ++out.paths;
    std::size_t k = 0;
    while (k < n && ++digit[k] == r) {
      digit[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return out;
}

std::vector<Vec2> random_lattice_points(RandomStream &rng, std::size_t count, int half_width) {
  std::vector<Vec2> pts(count);
  const auto span = static_cast<std::size_t>(2 * half_width);
  for (auto &p : pts) {
    p = {static_cast<double>(pick(rng, 0, span)) - half_width,
         static_cast<double>(pick(rng, 0, span)) - half_width};
  }
  return pts;
}

std::vector<Vec2> random_float_points(RandomStream &rng, std::size_t count, double half_width) {
  std::vector<Vec2> pts(count);
  for (auto &p : pts) {
    p = {(2.0 * rng.uniform() - 1.0) * half_width, (2.0 * rng.uniform() - 1.0) * half_width};
  }
  return pts;
}

std::vector<Vec2> random_walk_points(RandomStream &rng, std::size_t steps) {
  std::vector<Vec2> pts(steps + 1);
  for (std::size_t k = 1; k <= steps; ++k) {
    double z0, z1;
    rng.normal_pair(z0, z1);
    pts[k] = pts[k - 1] + Vec2{z0, z1};
  }
  return pts;
}

CheckResult check_hull_oracle(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 1);
  for (std::size_t c = 0; c < cases; ++c) {
    const bool lattice = c % 2 == 0;
    const std::size_t count = pick(rng, 1, 30);
    const auto pts = lattice ? random_lattice_points(rng, count, 10)
                             : random_float_points(rng, count, 10.0);
    const auto expected = brute_force_hull_vertices(pts);
    const auto got = sorted_vertices(convex_hull(pts));
    const auto fast = sorted_vertices(walk_hull(pts));
    const double tol = lattice ? 0.0 : 1e-9;
    if (!same_vertices(expected, got, tol) || !same_vertices(expected, fast, tol)) {
      return finish("hull_oracle", start, false, "hull mismatch for " + describe(pts));
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << cases << " point sets agree with brute force in " << secs << " s (limit 5 s)";
  return finish("hull_oracle", start, secs < 5.0, os.str());
}

CheckResult check_cauchy_identity(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 2);
  std::size_t degenerate = 0;
  double worst = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<Vec2> pts;
    switch (c % 10) {
    case 0:
      pts = random_float_points(rng, 1, 5.0);
      break;
    case 1: { // collinear: a segment
      const Vec2 a = random_float_points(rng, 1, 5.0)[0];
      const Vec2 d = random_float_points(rng, 1, 5.0)[0];
      for (std::size_t i = 0, m = pick(rng, 2, 8); i < m; ++i) {
        pts.push_back(a + rng.uniform() * d);
      }
      break;
    }
    case 2:
      pts = random_lattice_points(rng, pick(rng, 3, 30), 10);
      break;
    default:
      pts = random_float_points(rng, pick(rng, 3, 30), 1.0 + 10.0 * rng.uniform());
    }
    const ConvexPolygon hull = convex_hull(pts);
    if (hull.shape() != HullShape::full) ++degenerate;
    const double p = perimeter(hull);
    const double q = cauchy_perimeter(hull);
    const double err = std::fabs(p - q) / std::max(p, 1e-300);
    if (p > 0.0) worst = std::max(worst, err);
    if (std::fabs(p - q) > 1e-9 * p + 1e-15) {
      std::ostringstream os;
      os.precision(17);
      os << "perimeter " << p << " vs cauchy " << q << " for " << describe(pts);
      return finish("cauchy_identity", start, false, os.str());
    }
  }
  std::ostringstream os;
  os << cases << " hulls (" << degenerate << " degenerate), worst relative error " << worst;
  return finish("cauchy_identity", start, true, os.str());
}

CheckResult check_steiner(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 3);
  double worst_z = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto pts = random_float_points(rng, pick(rng, 1, 20), 1.0);
    const ConvexPolygon hull = convex_hull(pts);
    const double r = 0.05 + 0.95 * rng.uniform();
    const McEstimate est = parallel_body_area_mc(hull, r, 100'000, rng);
    const double exact = area(hull) + r * perimeter(hull) + kPi * r * r;
    const double z = std::fabs(est.estimate - exact) / est.standard_error;
    worst_z = std::max(worst_z, z);
    if (!(z <= 3.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "case " << c << ": r = " << r << ", estimate " << est.estimate << " +- "
         << est.standard_error << " vs " << exact << " (z = " << z << ") for " << describe(pts);
      return finish("steiner", start, false, os.str());
    }
  }
  std::ostringstream os;
  os << cases << " (hull, r) cases, largest |z| = " << worst_z << " (limit 3)";
  return finish("steiner", start, true, os.str());
}

CheckResult check_path_hull_contraction(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 4);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t steps = pick(rng, 1, 50);
    auto f = random_walk_points(rng, steps);
    auto g = f;
    const double scale = std::pow(10.0, 2.0 * rng.uniform() - 1.5);
    for (std::size_t k = 1; k < g.size(); ++k) {
      double z0, z1;
      rng.normal_pair(z0, z1);
      g[k] += scale * Vec2{z0, z1};
    }
    if (c % 3 == 0) { // unrelated path on the same grid
      g = random_walk_points(rng, steps);
    }
    const double sup = path_sup_distance(PolyPath(f), PolyPath(g));
    const double rho = hausdorff(convex_hull(f), convex_hull(g));
    if (rho > sup + 1e-9) {
      std::ostringstream os;
      os.precision(17);
      os << "rho_H " << rho << " > rho_inf " << sup << " for f = " << describe(f)
         << ", g = " << describe(g);
      return finish("path_hull_contraction", start, false, os.str());
    }
  }
  return finish("path_hull_contraction", start, true,
                std::to_string(cases) + " path pairs satisfy rho_H <= rho_inf");
}

CheckResult check_functional_continuity(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 5);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto a_pts = random_walk_points(rng, pick(rng, 1, 40));
    auto b_pts = c % 2 == 0 ? random_walk_points(rng, pick(rng, 1, 40)) : a_pts;
    if (c % 2 == 1) {
      const double scale = std::pow(10.0, 2.0 * rng.uniform() - 2.0);
      for (std::size_t k = 1; k < b_pts.size(); ++k) {
        double z0, z1;
        rng.normal_pair(z0, z1);
        b_pts[k] += scale * Vec2{z0, z1};
      }
    }
    const ConvexPolygon a = convex_hull(a_pts), b = convex_hull(b_pts);
    const double rho = hausdorff(a, b);
    const double la = perimeter(a), lb = perimeter(b);
    const double length_gap = std::fabs(la - lb);
    const double area_gap = std::fabs(area(a) - area(b));
    const bool ok_l = length_gap <= 2.0 * kPi * rho + 1e-9;
    const bool ok_a = area_gap <= kPi * rho * rho + std::max(la, lb) * rho + 1e-9;
    if (!ok_l || !ok_a) {
      std::ostringstream os;
      os.precision(17);
      os << (ok_l ? "area" : "length") << " comparison violated: rho_H = " << rho
         << ", |dL| = " << length_gap << ", |dA| = " << area_gap << " for A = " << describe(a_pts)
         << ", B = " << describe(b_pts);
      return finish("functional_continuity", start, false, os.str());
    }
  }
  return finish("functional_continuity", start, true,
                std::to_string(cases) + " hull pairs satisfy both comparison inequalities");
}

CheckResult check_affine_equivariance(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 6);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto pts = c % 2 == 0 ? random_lattice_points(rng, pick(rng, 1, 30), 10)
                                : random_float_points(rng, pick(rng, 1, 30), 10.0);
    Mat2 m;
    do {
      m = {4 * rng.uniform() - 2, 4 * rng.uniform() - 2, 4 * rng.uniform() - 2,
           4 * rng.uniform() - 2};
    } while (std::fabs(m.det()) < 0.1);
    const Vec2 shift{20 * rng.uniform() - 10, 20 * rng.uniform() - 10};
    const auto map = [&](const Vec2 &x) { return m * x + shift; };

    std::vector<Vec2> image;
    for (const Vec2 &p : pts) image.push_back(map(p));
    const auto direct = sorted_vertices(convex_hull(image));
    const ConvexPolygon hull = convex_hull(pts);
    std::vector<Vec2> mapped;
    for (const Vec2 &v : hull.vertices()) mapped.push_back(map(v));
    std::sort(mapped.begin(), mapped.end());
    if (!same_vertices(direct, mapped, 1e-9)) {
      return finish("affine_equivariance", start, false,
                    "hull does not commute with affine map for " + describe(pts));
    }
  }
  return finish("affine_equivariance", start, true,
                std::to_string(cases) + " random affine maps commute with the hull");
}

CheckResult check_monotonicity(std::size_t cases, std::uint64_t seed) {
  const auto start = Clock::now();
  RandomStream rng(seed, 7);
  for (std::size_t c = 0; c < cases; ++c) {
    const auto pts = random_float_points(rng, pick(rng, 2, 30), 5.0);
    std::vector<Vec2> subset;
    for (const Vec2 &p : pts) {
      if (rng.uniform() < 0.5) subset.push_back(p);
    }
    if (subset.empty()) subset.push_back(pts.front());
    const ConvexPolygon inner = convex_hull(subset), outer = convex_hull(pts);
    if (perimeter(inner) > perimeter(outer) + 1e-12 || area(inner) > area(outer) + 1e-12) {
      return finish("monotonicity", start, false, "nested hulls not ordered for " + describe(pts));
    }
  }
  return finish("monotonicity", start, true,
                std::to_string(cases) + " nested pairs ordered in perimeter and area");
}

CheckResult check_oracle_equivalence(std::size_t max_n) {
  const auto start = Clock::now();
  std::ostringstream os;
  os.precision(15);
  double worst = 0.0;
  for (const char *name : {"ssrw_z2", "spacetime_pm1", "lazy_right"}) {
    const IncrementModel model = IncrementModel::builtin(name);
    const auto atoms = *model.planar_atoms();
    for (std::size_t n = 1; n <= max_n; ++n) {
      const ExactExpectations exact = exact_expectations(model, n);
      const EnumeratedExpectations brute = enumerate_paths(atoms, n);
      const double dl = std::fabs(exact.expected_perimeter - brute.expected_perimeter);
      const double da = std::fabs(exact.expected_area - brute.expected_area);
      worst = std::max({worst, dl, da});
      if (dl > 1e-12 || da > 1e-12) {
        os << name << " n = " << n << ": E L " << exact.expected_perimeter << " vs "
           << brute.expected_perimeter << ", E A " << exact.expected_area << " vs "
           << brute.expected_area;
        return finish("oracle_equivalence", start, false, os.str());
      }
    }
  }
  os << "convolution formulas match full path enumeration for n <= " << max_n
     << " (largest gap " << worst << ")";
  return finish("oracle_equivalence", start, true, os.str());
}

CheckResult check_mc_against_exact(std::size_t n, std::size_t replicas, std::uint64_t seed,
                                   unsigned threads) {
  const auto start = Clock::now();
  const IncrementModel model = IncrementModel::builtin("ssrw_z2");
  const ExactExpectations exact = exact_expectations(model, n);
  ExperimentConfig config;
  config.model = model;
  config.n = n;
  config.replicas = replicas;
  config.master_seed = seed;
  config.threads = threads;
  const EstimatorReport rep = run_experiment(config);
  const MetricSummary &L = *rep.metric("L");
  const MetricSummary &A = *rep.metric("A");
  const double zl = std::fabs(L.mean - exact.expected_perimeter) / (L.mean_ci / kZ95);
  const double za = std::fabs(A.mean - exact.expected_area) / (A.mean_ci / kZ95);
  std::ostringstream os;
  os.precision(8);
  os << "ssrw_z2 n = " << n << ", R = " << replicas << ": mean L " << L.mean << " vs exact "
     << exact.expected_perimeter << " (z = " << zl << "), mean A " << A.mean << " vs exact "
     << exact.expected_area << " (z = " << za << "), limit 4";
  return finish("mc_against_exact", start, zl <= 4.0 && za <= 4.0, os.str());
}

CheckResult check_rounded_bounds() {
  const auto start = Clock::now();
  const BoundsReport b = variance_bounds(Mat2::identity());
  struct Row {
    const char *name;
    double lower, upper, printed_lower, printed_upper, estimate;
  };
  const Row rows[] = {
      {"u0(I)", b.u0_identity_lower, b.u0_upper, 2.65e-3, 9.87, ReferenceEstimates::u0_identity},
      {"v0", b.v0_lower, b.v0_upper, 8.15e-7, 5.22, ReferenceEstimates::v0},
      {"v+", b.vplus_lower, b.vplus_upper, 1.44e-6, 2.08, ReferenceEstimates::vplus},
  };
  const auto same = [](double x, double y) { return std::fabs(x - y) <= 1e-12 * std::fabs(y); };
  std::ostringstream os;
  os.precision(6);
  bool ok = true;
  for (const Row &r : rows) {
    const double lo = round_sig_down(r.lower, 3), hi = round_sig_up(r.upper, 3);
    const bool row_ok = same(lo, r.printed_lower) && same(hi, r.printed_upper) &&
                        r.lower < r.estimate && r.estimate < r.upper;
    ok = ok && row_ok;
    os << (&r == rows ? "" : "; ") << r.name << ": [" << lo << ", " << hi << "] "
       << (row_ok ? "ok" : "MISMATCH");
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 1.0;
  return finish("rounded_bounds", start, ok, os.str());
}

namespace {

// Seeds for the limit experiments; every run uses its own.
constexpr std::uint64_t kSeedSsrwMean = 0x5157A1;
constexpr std::uint64_t kSeedSpacetimeMean = 0x5157A2;
constexpr std::uint64_t kSeedLazyMean = 0x5157A3;
constexpr std::uint64_t kSeedSsrwVar = 0x5157B1;
constexpr std::uint64_t kSeedSpacetimeVar = 0x5157B2;
constexpr std::uint64_t kSeedEll1 = 0x5157C1;
constexpr std::uint64_t kSeedA1 = 0x5157C2;
constexpr std::uint64_t kSeedAtilde1 = 0x5157C3;
constexpr std::uint64_t kSeedExtra = 0x5157D0;
constexpr std::uint64_t kSeedMoments = 0x5157E0;

ExperimentConfig limits_config(const std::string &model, std::size_t n, std::size_t replicas,
                               std::uint64_t seed, unsigned threads) {
  ExperimentConfig c;
  c.model = IncrementModel::builtin(model);
  c.n = n;
  c.replicas = replicas;
  c.master_seed = seed;
  c.threads = threads;
  return c;
}

std::pair<EstimatorReport, ReplicaSamples> run_with_samples(const ExperimentConfig &c) {
  const auto start = Clock::now();
  ReplicaSamples s = simulate_replicas(c);
  EstimatorReport rep = summarize(c, s);
  rep.wall_seconds = seconds_since(start);
  return {std::move(rep), std::move(s)};
}

bool within(double value, double target, double rel) {
  return std::fabs(value - target) <= rel * std::fabs(target);
}

} // namespace

LimitsData compute_limits_data(unsigned threads) {
  LimitsData d;
  std::tie(d.ssrw_mean, d.ssrw_samples) =
      run_with_samples(limits_config("ssrw_z2", 10'000, 10'000, kSeedSsrwMean, threads));
  std::tie(d.spacetime_mean, d.spacetime_samples) =
      run_with_samples(limits_config("spacetime_pm1", 10'000, 10'000, kSeedSpacetimeMean, threads));
  d.lazy_mean = run_experiment(limits_config("lazy_right", 10'000, 10'000, kSeedLazyMean, threads));
  d.ssrw_var = run_experiment(limits_config("ssrw_z2", 20'000, 20'000, kSeedSsrwVar, threads));
  d.spacetime_var =
      run_experiment(limits_config("spacetime_pm1", 20'000, 20'000, kSeedSpacetimeVar, threads));
  d.ell1 = brownian_reference(10'000, 10'000, ReferenceKind::ell1, kSeedEll1, threads);
  d.a1 = brownian_reference(10'000, 10'000, ReferenceKind::a1, kSeedA1, threads);
  d.atilde1 = brownian_reference(10'000, 10'000, ReferenceKind::atilde1, kSeedAtilde1, threads);

  std::uint64_t seed = kSeedExtra;
  for (const std::string &name : IncrementModel::builtin_names()) {
    for (std::size_t n : {10u, 100u, 1000u}) {
      d.extra_reports.push_back(run_experiment(limits_config(name, n, 10'000, seed++, threads)));
    }
  }
  return d;
}

CheckResult check_mean_asymptotics(const LimitsData &d) {
  const auto start = Clock::now();
  const LimitConstants k = limit_constants();
  const double ssrw_l = d.ssrw_mean.constant("mean_L")->estimate;
  const double ssrw_a = d.ssrw_mean.constant("mean_A")->estimate;
  const double st_l = d.spacetime_mean.constant("mean_L")->estimate;
  const double st_a = d.spacetime_mean.constant("mean_A")->estimate;
  const MetricSummary &lazy_a = *d.lazy_mean.metric("A");
  const double lazy_var_l = d.lazy_mean.constant("var_L")->estimate;

  const bool ok = within(ssrw_l, k.E_ell1, 0.02) && within(ssrw_a, k.E_a1, 0.03) &&
                  within(st_l, 2.0, 0.02) && within(st_a, k.E_atilde1, 0.03) &&
                  lazy_a.mean == 0.0 && lazy_a.variance == 0.0 && within(lazy_var_l, 4.0, 0.10);
  std::ostringstream os;
  os.precision(6);
  os << "ssrw_z2 n^-1/2 EL = " << ssrw_l << " (target " << k.E_ell1 << " +-2%), n^-1 EA = "
     << ssrw_a << " (" << k.E_a1 << " +-3%); spacetime_pm1 n^-1 EL = " << st_l
     << " (2 +-2%), n^-3/2 EA = " << st_a << " (" << k.E_atilde1
     << " +-3%); lazy_right EA = " << lazy_a.mean << ", VarA = " << lazy_a.variance
     << ", n^-1 VarL = " << lazy_var_l << " (4 +-10%)";
  return finish("mean_asymptotics", start, ok, os.str());
}

CheckResult check_variance_constants(const LimitsData &d) {
  const auto start = Clock::now();
  const double u0 = d.ssrw_var.constant("u0")->estimate;
  const double v0 = d.ssrw_var.constant("v0")->estimate;
  const double vplus = d.spacetime_var.constant("vplus")->estimate;
  const bool ok = within(u0, ReferenceEstimates::u0_identity, 0.15) &&
                  within(v0, ReferenceEstimates::v0, 0.15) &&
                  within(vplus, ReferenceEstimates::vplus, 0.20);
  std::ostringstream os;
  os.precision(5);
  os << "u0(I) = " << u0 << " (1.08 +-15%), v0 = " << v0 << " (0.30 +-15%), v+ = " << vplus
     << " (0.019 +-20%)";
  return finish("variance_constants", start, ok, os.str());
}

CheckResult check_brownian_reference(const LimitsData &d) {
  const auto start = Clock::now();
  const LimitConstants k = limit_constants();
  const double l = d.ell1.mean(), a = d.a1.mean(), at = d.atilde1.mean();
  const bool ok = within(l, k.E_ell1, 0.02) && within(a, k.E_a1, 0.02) &&
                  within(at, k.E_atilde1, 0.02);
  // Exact expectations of the same finite walks, for reading the result.
  const std::size_t m = 10'000;
  const IncrementModel g = IncrementModel::builtin("gaussian_std");
  const double walk_l = exact_expectations(g, m).expected_perimeter / std::sqrt(double(m));
  const double walk_a = bnb_EA(g, m) / double(m);
  const double walk_at = bnb_EA(IncrementModel::builtin("spacetime_gauss"), m) / std::pow(m, 1.5);
  std::ostringstream os;
  os.precision(6);
  os << "E ell1 = " << l << " (" << k.E_ell1 << "), E a1 = " << a << " (" << k.E_a1
     << "), E atilde1 = " << at << " (" << k.E_atilde1 << "), all +-2%; exact means of the m = "
     << m << " walks: " << walk_l << ", " << walk_a << ", " << walk_at;
  return finish("brownian_reference", start, ok, os.str());
}

CheckResult check_distributional_limits(const LimitsData &d) {
  const auto start = Clock::now();
  const double n1 = static_cast<double>(d.ssrw_mean.n);
  std::vector<double> l = d.ssrw_samples.perimeter;
  for (double &v : l) v /= std::sqrt(n1);
  const double n2 = static_cast<double>(d.spacetime_mean.n);
  const WalkStats &st = d.spacetime_mean.stats;
  const double norm_a = std::pow(n2, 1.5) * norm(st.mu) * std::sqrt(*st.sigma2_perp);
  std::vector<double> a = d.spacetime_samples.area;
  for (double &v : a) v /= norm_a;
  const double ks_l = ks_distance(Sample(std::move(l)), d.ell1);
  const double ks_a = ks_distance(Sample(std::move(a)), d.atilde1);
  std::ostringstream os;
  os.precision(5);
  os << "KS(ssrw_z2 n^-1/2 L, ell1) = " << ks_l << ", KS(spacetime_pm1 scaled A, atilde1) = "
     << ks_a << " (limit 0.02)";
  return finish("distributional_limits", start, ks_l <= 0.02 && ks_a <= 0.02, os.str());
}

CheckResult check_snyder_steele(const LimitsData &d) {
  const auto start = Clock::now();
  std::vector<const EstimatorReport *> reports{&d.ssrw_mean, &d.spacetime_mean, &d.lazy_mean,
                                               &d.ssrw_var, &d.spacetime_var};
  for (const auto &r : d.extra_reports) reports.push_back(&r);
  double min_slack = std::numeric_limits<double>::infinity();
  for (const EstimatorReport *r : reports) {
    const SnyderSteeleResult s = snyder_steele_check(*r, r->stats);
    min_slack = std::min(min_slack, s.slack);
    if (!s.passed) {
      std::ostringstream os;
      os << r->model_name << " n = " << r->n << " seed " << r->master_seed
         << ": n^-1 VarL = " << s.scaled_variance << " exceeds " << s.bound << " + "
         << s.tolerance;
      return finish("snyder_steele", start, false, os.str());
    }
  }
  std::ostringstream os;
  os << reports.size() << " (model, n) runs within the bound, smallest slack " << min_slack;
  return finish("snyder_steele", start, true, os.str());
}

CheckResult check_moment_slopes(unsigned threads) {
  const auto start = Clock::now();
  const std::vector<std::size_t> grid{1000, 2154, 4642, 10000, 21544, 46416, 100000};
  const MomentGrowth zero = moment_growth_diagnostic(IncrementModel::builtin("ssrw_z2"), 2.0, grid,
                                                     2000, kSeedMoments, MomentTarget::norm, threads);
  const MomentGrowth drift =
      moment_growth_diagnostic(IncrementModel::builtin("lazy_right"), 2.0, grid, 2000,
                               kSeedMoments + 1, MomentTarget::drift_projection, threads);
  const bool ok = !zero.degenerate && !drift.degenerate && std::fabs(zero.slope - 1.0) <= 0.1 &&
                  std::fabs(drift.slope - 2.0) <= 0.1;
  std::ostringstream os;
  os.precision(5);
  os << "ssrw_z2 p = 2 slope " << zero.slope << " (1 +-0.1), lazy_right drift p = 2 slope "
     << drift.slope << " (2 +-0.1)";
  return finish("moment_slopes", start, ok, os.str());
}

std::vector<std::string> suite_names() { return {"geometry", "oracles", "limits"}; }

std::vector<CheckResult> run_suite(const std::string &name, unsigned threads) {
  if (name == "geometry") {
    return {check_hull_oracle(1000, 101),           check_cauchy_identity(1000, 102),
            check_steiner(100, 103),                check_path_hull_contraction(1000, 104),
            check_functional_continuity(1000, 105), check_affine_equivariance(500, 106),
            check_monotonicity(500, 107)};
  }
  if (name == "oracles") {
    return {check_oracle_equivalence(6), check_mc_against_exact(10, 1'000'000, 201, threads),
            check_rounded_bounds()};
  }
  if (name == "limits") {
    const LimitsData d = compute_limits_data(threads);
    return {check_mean_asymptotics(d),      check_variance_constants(d),
            check_brownian_reference(d),    check_distributional_limits(d),
            check_snyder_steele(d),         check_moment_slopes(threads)};
  }
  throw InputError("unknown suite '" + name + "'");
}

} // namespace hullwalk::verify

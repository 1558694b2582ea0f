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

#include "hullwalk/exact_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "hullwalk/error.hpp"
#include "quadrature.hpp"

namespace hullwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadratureTolerance = 1e-10;

struct PointKey {
  std::uint64_t x, y;
  bool operator==(const PointKey &) const = default;
};

struct PointKeyHash {
  std::size_t operator()(const PointKey &k) const {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
    h ^= (k.y + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

PointKey key_of(const Vec2 &v) {
  // +0.0 and -0.0 are the same support point.
  return {std::bit_cast<std::uint64_t>(v.x + 0.0), std::bit_cast<std::uint64_t>(v.y + 0.0)};
}

// Standard normal density.
double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

// sum_{k=2}^n sum_{m=1}^{k-1} w(k) / sqrt(m (k - m)).
template <class Weight> double weighted_pi_sum(std::size_t n, Weight w) {
  double total = 0.0;
  for (std::size_t k = 2; k <= n; ++k) {
    total += w(k) * pi_sum_check(k);
  }
  return total;
}

std::vector<double> norms_up_to(const IncrementModel &model, std::size_t n) {
  std::vector<double> norms(n);
  for (std::size_t k = 1; k <= n; ++k) {
    norms[k - 1] = expected_norm(model, k);
  }
  return norms;
}

const ScalarNormal *spacetime_normal(const IncrementModel &model) {
  if (const auto *st = std::get_if<SpaceTimeLaw>(&model.law())) {
    return std::get_if<ScalarNormal>(&st->vertical);
  }
  return nullptr;
}

const GaussianLaw *centered_gaussian(const IncrementModel &model) {
  const auto *g = std::get_if<GaussianLaw>(&model.law());
  return (g != nullptr && g->mean == Vec2{}) ? g : nullptr;
}

// E T(S_a, S'_b) for independent walks, for all a + b <= n, a, b >= 1.
std::vector<std::vector<double>> triangle_means(const AtomConvolution &conv, std::size_t n) {
  double work = 0.0;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; a + b <= n; ++b) {
      work += static_cast<double>(conv.law(a).size()) * static_cast<double>(conv.law(b).size());
    }
  }
  if (work > kEnumerationWorkLimit) {
    throw ResourceError("enumeration too large");
  }
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; a + b <= n; ++b) {
      double acc = 0.0;
      for (const auto &[u, pu] : conv.law(a)) {
        double inner = 0.0;
        for (const auto &[v, pv] : conv.law(b)) {
          inner += pv * std::fabs(cross(u, v));
        }
        acc += pu * inner;
      }
      table[a][b] = table[b][a] = 0.5 * acc;
    }
  }
  return table;
}

double bnb_from_table(const std::vector<std::vector<double>> &t, std::size_t n) {
  double total = 0.0;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t m = 1; m < k; ++m) {
      total += t[m][k - m] / static_cast<double>(m * (k - m));
    }
  }
  return total;
}

} // namespace

LimitConstants limit_constants() {
  LimitConstants c;
  c.E_ell1 = std::sqrt(8.0 * kPi);
  c.E_a1 = 0.5 * kPi;
  c.E_atilde1 = std::sqrt(2.0 * kPi) / 3.0;
  c.var_bridge_perimeter = kPi * kPi / 6.0 * (2.0 * kPi * sine_integral(kPi) - 2.0 - 3.0 * kPi);
  return c;
}

double sine_integral(double x) {
  if (std::fabs(x) > 8.0) {
    throw InputError("sine_integral series used outside |x| <= 8");
  }
  // sum_j (-1)^j x^{2j+1} / ((2j+1) (2j+1)!)
  double term = x; // (-1)^j x^{2j+1} / (2j+1)!
  double total = 0.0;
  for (int j = 0; j < 60; ++j) {
    total += term / (2.0 * j + 1.0);
    term *= -x * x / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
  }
  return total;
}

double spitzer_widom_EL(std::span<const double> expected_norms) {
  if (expected_norms.empty()) {
    throw InputError("need at least one expected norm");
  }
  double total = 0.0;
  for (std::size_t k = 1; k <= expected_norms.size(); ++k) {
    const double e = expected_norms[k - 1];
    if (!(e >= 0.0)) {
      throw InputError("expected norms must be nonnegative");
    }
    total += e / static_cast<double>(k);
  }
  return 2.0 * total;
}

AtomConvolution::AtomConvolution(std::span<const Atom> atoms, std::size_t k_max,
                                 std::size_t state_limit) {
  laws_.reserve(k_max + 1);
  laws_.push_back({{Vec2{}, 1.0}});
  std::size_t stored = 1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Law &prev = laws_.back();
    Law next;
    std::unordered_map<PointKey, std::size_t, PointKeyHash> index;
    index.reserve(prev.size() * 2);
    for (const auto &[x, p] : prev) {
      for (const Atom &a : atoms) {
        const Vec2 y = x + a.value;
        const auto [it, inserted] = index.try_emplace(key_of(y), next.size());
        if (inserted) {
          if (stored + next.size() >= state_limit) {
            throw ResourceError("enumeration too large");
          }
          next.emplace_back(y, 0.0);
        }
        next[it->second].second += p * a.probability;
      }
    }
    stored += next.size();
    laws_.push_back(std::move(next));
  }
}

double AtomConvolution::expected_norm(std::size_t k) const {
  double total = 0.0;
  for (const auto &[x, p] : law(k)) {
    total += p * norm(x);
  }
  return total;
}

std::size_t AtomConvolution::largest_table() const {
  std::size_t best = 0;
  for (const Law &l : laws_) {
    best = std::max(best, l.size());
  }
  return best;
}

double expected_norm_atoms(const IncrementModel &model, std::size_t k) {
  const auto atoms = model.planar_atoms();
  if (!atoms) {
    throw InputError("model '" + model.name() + "' is not finitely supported");
  }
  return AtomConvolution(*atoms, k).expected_norm(k);
}

double expected_norm_gaussian(const Mat2 &sigma, std::size_t k) {
  const Mat2 root = matrix_sqrt(sigma);
  const double kk = static_cast<double>(k);
  if (sigma.b == 0.0 && sigma.c == 0.0 && sigma.a == sigma.d) {
    return std::sqrt(kk * sigma.a * kPi / 2.0);
  }
  const auto integrand = [&](double theta) {
    return norm(root * Vec2{std::cos(theta), std::sin(theta)});
  };
  const double circle = detail::adaptive_simpson(integrand, 0.0, 2.0 * kPi, kQuadratureTolerance);
  return std::sqrt(kk) * circle / std::sqrt(8.0 * kPi);
}

namespace {

double expected_norm_spacetime_normal(const ScalarNormal &law, std::size_t k) {
  const double kk = static_cast<double>(k);
  const double centre = kk * law.mean;
  const double spread = std::sqrt(kk) * law.stddev;
  if (spread == 0.0) {
    return std::hypot(kk, centre);
  }
  const auto integrand = [&](double z) { return std::hypot(kk, centre + spread * z) * phi(z); };
  // |z| > 12 carries mass below 1e-32.
  return detail::adaptive_simpson(integrand, -12.0, 12.0, kQuadratureTolerance * std::max(1.0, kk));
}

} // namespace

double expected_norm_spacetime_gauss(std::size_t k) {
  return expected_norm_spacetime_normal(ScalarNormal{0.0, 1.0}, k);
}

double expected_norm(const IncrementModel &model, std::size_t k) {
  if (k == 0) {
    return 0.0;
  }
  if (model.planar_atoms()) {
    return expected_norm_atoms(model, k);
  }
  if (const auto *g = centered_gaussian(model)) {
    return expected_norm_gaussian(g->covariance, k);
  }
  if (const auto *normal = spacetime_normal(model)) {
    return expected_norm_spacetime_normal(*normal, k);
  }
  throw InputError("no exact expected-norm route for model '" + model.name() + "'");
}

double bnb_EA(const IncrementModel &model, std::size_t n) {
  if (n == 0) {
    throw InputError("n must be at least 1");
  }
  if (const auto atoms = model.planar_atoms()) {
    if (n == 1) {
      return 0.0;
    }
    const AtomConvolution conv(*atoms, n - 1);
    return bnb_from_table(triangle_means(conv, n), n);
  }
  if (const auto *g = centered_gaussian(model)) {
    // E T(S_m, S_k - S_m) = sqrt(m (k - m)) sqrt(det Sigma) / 2.
    const double det = std::max(g->covariance.det(), 0.0);
    return 0.5 * std::sqrt(det) * weighted_pi_sum(n, [](std::size_t) { return 1.0; });
  }
  if (const auto *normal = spacetime_normal(model)) {
    // The vertical drift cancels in the cross product; what remains is
    // |xi| stddev sqrt(k m (k - m)) / 2.
    return normal->stddev / std::sqrt(2.0 * kPi) *
           weighted_pi_sum(n, [](std::size_t k) { return std::sqrt(static_cast<double>(k)); });
  }
  throw InputError("no exact expected-area route for model '" + model.name() + "'");
}

ExactExpectations exact_expectations(const IncrementModel &model, std::size_t n) {
  if (n == 0) {
    throw InputError("n must be at least 1");
  }
  ExactExpectations out;
  out.n = n;
  if (const auto atoms = model.planar_atoms()) {
    const AtomConvolution conv(*atoms, n);
    std::vector<double> norms(n);
    for (std::size_t k = 1; k <= n; ++k) {
      norms[k - 1] = conv.expected_norm(k);
    }
    out.expected_perimeter = spitzer_widom_EL(norms);
    out.expected_area = n >= 2 ? bnb_from_table(triangle_means(conv, n), n) : 0.0;
    out.enumeration_depth = n;
    out.largest_table = conv.largest_table();
    return out;
  }
  out.expected_perimeter = spitzer_widom_EL(norms_up_to(model, n));
  out.expected_area = bnb_EA(model, n);
  return out;
}

const PredictedLimit &AsymptoticPredictions::get(const std::string &quantity) const {
  for (const auto &l : limits) {
    if (l.quantity == quantity) {
      return l;
    }
  }
  throw std::out_of_range("no prediction for " + quantity);
}

AsymptoticPredictions asymptotic_predictions(const WalkStats &stats) {
  AsymptoticPredictions out;
  out.zero_drift = stats.zero_drift();
  const Mat2 &s = stats.sigma_mat;
  if (out.zero_drift) {
    const double det = std::max(s.det(), 0.0);
    out.limits.push_back({"mean_L", 0.5, 4.0 * expected_norm_gaussian(s, 1), true, "4 E|Y|, Y ~ N(0, Sigma)"});
    std::optional<double> u0;
    if (s.b == 0.0 && s.c == 0.0 && s.a == s.d) {
      u0 = ReferenceEstimates::u0_identity * s.a;
    }
    out.limits.push_back({"var_L", 1.0, u0, false, "u0(Sigma)"});
    out.limits.push_back({"mean_A", 1.0, 0.5 * kPi * std::sqrt(det), true, "(pi/2) sqrt(det Sigma)"});
    out.limits.push_back({"var_A", 2.0, ReferenceEstimates::v0 * det, det == 0.0, "v0 det Sigma"});
  } else {
    const double speed = norm(stats.mu);
    const double along = *stats.sigma2_mu;
    const double across = *stats.sigma2_perp;
    out.limits.push_back({"mean_L", 1.0, 2.0 * speed, true, "2 |mu|"});
    out.limits.push_back({"var_L", 1.0, 4.0 * along, true, "4 sigma2_mu"});
    out.limits.push_back({"mean_A", 1.5, speed * std::sqrt(2.0 * kPi * across) / 3.0, true,
                          "(1/3) |mu| sqrt(2 pi sigma2_perp)"});
    out.limits.push_back({"var_A", 3.0, ReferenceEstimates::vplus * speed * speed * across,
                          across == 0.0, "v+ |mu|^2 sigma2_perp"});
  }
  return out;
}

BoundsReport variance_bounds_for_trace(double trace_sigma) {
  if (!(trace_sigma >= 0.0)) {
    throw InputError("trace of Sigma must be nonnegative");
  }
  BoundsReport b;
  b.trace_sigma = trace_sigma;
  b.u0_lower = 263.0 / 1080.0 * std::pow(kPi, -1.5) * std::exp(-144.0 / 25.0) * trace_sigma;
  b.u0_upper = kPi * kPi / 2.0 * trace_sigma;
  b.u0_identity_lower = 0.4 * (1.0 - 8.0 / (25.0 * kPi)) * std::exp(-25.0 * kPi / 16.0);
  const double v0_core = std::exp(-7.0 * kPi * kPi / 12.0) - std::exp(-21.0 * kPi * kPi / 4.0) / 3.0;
  b.v0_lower = 4.0 / 49.0 * v0_core * v0_core;
  b.v0_upper = 16.0 * std::log(2.0) * std::log(2.0) - kPi * kPi / 4.0;
  b.vplus_lower = 2.0 / 225.0 * (std::exp(-25.0 * kPi / 9.0) - std::exp(-25.0 * kPi) / 3.0);
  b.vplus_upper = 4.0 * std::log(2.0) - 2.0 * kPi / 9.0;
  return b;
}

BoundsReport variance_bounds(const Mat2 &sigma) {
  (void)matrix_sqrt(sigma); // validates symmetry and PSD
  return variance_bounds_for_trace(sigma.trace());
}

double pi_sum_check(std::size_t k) {
  if (k < 2) {
    throw InputError("pi_sum_check needs k >= 2");
  }
  // Symmetric in m <-> k - m; sum the smaller terms first.
  long double total = 0.0L;
  const long double kk = static_cast<long double>(k);
  for (std::size_t m = k / 2; m >= 1; --m) {
    const long double mm = static_cast<long double>(m);
    const long double term = 1.0L / std::sqrt(mm * (kk - mm));
    total += (2 * m == k) ? term : 2.0L * term;
  }
  return static_cast<double>(total);
}

namespace {

double round_sig(double x, int digits, bool up) {
  if (x == 0.0 || !std::isfinite(x)) {
    return x;
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  const double quantum = std::pow(10.0, exponent - digits + 1);
  const double scaled = x / quantum;
  return (up ? std::ceil(scaled) : std::floor(scaled)) * quantum;
}

} // namespace

double round_sig_down(double x, int digits) { return round_sig(x, digits, false); }
double round_sig_up(double x, int digits) { return round_sig(x, digits, true); }

} // namespace hullwalk

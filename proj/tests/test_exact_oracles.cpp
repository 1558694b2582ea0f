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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hullwalk/error.hpp"
#include "hullwalk/exact_oracles.hpp"
#include "hullwalk/verify.hpp"

using namespace hullwalk;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
} // namespace

TEST_CASE("limit constants") {
  const LimitConstants k = limit_constants();
  CHECK(k.E_ell1 == Approx(std::sqrt(8 * kPi)).epsilon(1e-15));
  CHECK(k.E_a1 == Approx(kPi / 2).epsilon(1e-15));
  CHECK(k.E_atilde1 == Approx(std::sqrt(2 * kPi) / 3).epsilon(1e-15));
  CHECK(k.E_atilde1 == Approx(0.83555).epsilon(1e-5));
}

TEST_CASE("expected perimeter from expected norms") {
  const std::vector<double> one{kSqrt2};
  CHECK(spitzer_widom_EL(one) == Approx(2 * kSqrt2).epsilon(1e-15));
  const std::vector<double> two{kSqrt2, 1 + kSqrt2 / 2};
  CHECK(spitzer_widom_EL(two) == Approx(2 * kSqrt2 + 1 + kSqrt2 / 2).epsilon(1e-15));
  CHECK(spitzer_widom_EL(two) == Approx(4.53553).epsilon(1e-6));
  CHECK_THROWS_AS(spitzer_widom_EL(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(spitzer_widom_EL(std::vector<double>{-1.0}), InputError);

  // N(0, I): E|S_k| = sqrt(k pi / 2).
  const IncrementModel g = IncrementModel::builtin("gaussian_std");
  double sum = 0.0;
  for (int k = 1; k <= 20; ++k) sum += 1 / std::sqrt(double(k));
  CHECK(exact_expectations(g, 20).expected_perimeter ==
        Approx(std::sqrt(2 * kPi) * sum).epsilon(1e-12));
}

TEST_CASE("expected norms of atom walks") {
  const IncrementModel ssrw = IncrementModel::builtin("ssrw_z2");
  CHECK(expected_norm_atoms(ssrw, 1) == Approx(kSqrt2).epsilon(1e-15));
  CHECK(expected_norm_atoms(ssrw, 2) == Approx(1 + kSqrt2 / 2).epsilon(1e-15));
  CHECK(expected_norm_atoms(IncrementModel::builtin("lazy_right"), 3) ==
        Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(expected_norm_atoms(IncrementModel::builtin("gaussian_std"), 1), InputError);
}

TEST_CASE("expected norms of gaussian walks") {
  CHECK(expected_norm_gaussian(Mat2::identity(), 1) == Approx(std::sqrt(kPi / 2)).epsilon(1e-12));
  CHECK(expected_norm_gaussian(Mat2::identity(), 1) == Approx(1.25331).epsilon(1e-5));
  CHECK(expected_norm_gaussian(Mat2{}, 7) == 0.0);

  const double v = expected_norm_gaussian(Mat2::diag(1, 4), 1);
  CHECK(v >= std::sqrt(5.0 / kPi));
  CHECK(v <= std::sqrt(5.0));
  // Cross-check by sampling.
  RandomStream rng(99, 0);
  const int n = 10'000'000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    double z0, z1;
    rng.normal_pair(z0, z1);
    const double r = std::hypot(z0, 2 * z1);
    s += r;
    s2 += r * r;
  }
  const double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
  CHECK(std::fabs(v - mean) <= 4 * se);
}

TEST_CASE("expected triangle area of two gaussian steps") {
  // E T(W1, W2) = 1/2 for independent standard planar normals.
  RandomStream rng(100, 0);
  const int n = 10'000'000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    double a, b, c, d;
    rng.normal_pair(a, b);
    rng.normal_pair(c, d);
    const double t = triangle_area({a, b}, {c, d});
    s += t;
    s2 += t * t;
  }
  const double mean = s / n, se = std::sqrt((s2 / n - mean * mean) / n);
  CHECK(std::fabs(mean - 0.5) <= 4 * se);
}

TEST_CASE("expected area") {
  CHECK(bnb_EA(IncrementModel::builtin("ssrw_z2"), 2) == Approx(0.5).epsilon(1e-15));
  CHECK(bnb_EA(IncrementModel::builtin("spacetime_gauss"), 2) ==
        Approx(1 / std::sqrt(kPi)).epsilon(1e-14));
  CHECK(bnb_EA(IncrementModel::builtin("lazy_right"), 100) == 0.0);
  CHECK(bnb_EA(IncrementModel::builtin("ssrw_z2"), 1) == 0.0);
}

TEST_CASE("exact values agree with full enumeration") {
  for (const char *name : {"ssrw_z2", "spacetime_pm1", "lazy_right"}) {
    const IncrementModel m = IncrementModel::builtin(name);
    const auto atoms = *m.planar_atoms();
    for (std::size_t n = 1; n <= 6; ++n) {
      const ExactExpectations e = exact_expectations(m, n);
      const verify::EnumeratedExpectations b = verify::enumerate_paths(atoms, n);
      CHECK(std::fabs(e.expected_perimeter - b.expected_perimeter) <= 1e-12);
      CHECK(std::fabs(e.expected_area - b.expected_area) <= 1e-12);
    }
  }
  const IncrementModel custom =
      IncrementModel::atoms("skew", {{0.5, {1, 0}}, {0.3, {-0.5, 2}}, {0.2, {0.25, -1}}});
  for (std::size_t n = 1; n <= 7; ++n) {
    const ExactExpectations e = exact_expectations(custom, n);
    const verify::EnumeratedExpectations b =
        verify::enumerate_paths(*custom.planar_atoms(), n);
    CHECK(e.expected_perimeter == Approx(b.expected_perimeter).epsilon(1e-12));
    CHECK(e.expected_area == Approx(b.expected_area).epsilon(1e-12));
  }
}

TEST_CASE("enumeration limit") {
  // Generic real atoms never merge, so the support grows like 6^k.
  const IncrementModel wide = IncrementModel::atoms(
      "wide", {{0.2, {1, 0}}, {0.2, {0.3, 1.7}}, {0.15, {-1.1, 0.9}}, {0.15, {-0.7, -1.3}},
               {0.15, {0.45, -0.2}}, {0.15, {0.05, 2.9}}});
  CHECK_THROWS_AS(exact_expectations(wide, 60), ResourceError);
}

TEST_CASE("asymptotic predictions") {
  const auto zero = asymptotic_predictions(increment_stats(IncrementModel::builtin("ssrw_z2")));
  CHECK(zero.zero_drift);
  CHECK(*zero.get("mean_L").value == Approx(std::sqrt(8 * kPi)).epsilon(1e-15));
  CHECK(*zero.get("mean_A").value == Approx(kPi / 2).epsilon(1e-15));
  CHECK(zero.get("mean_L").exponent == 0.5);
  CHECK(zero.get("var_A").exponent == 2.0);

  const auto st = asymptotic_predictions(increment_stats(IncrementModel::builtin("spacetime_pm1")));
  CHECK(!st.zero_drift);
  CHECK(*st.get("mean_L").value == Approx(2.0).epsilon(1e-15));
  CHECK(*st.get("mean_A").value == Approx(std::sqrt(2 * kPi) / 3).epsilon(1e-15));
  CHECK(st.get("mean_A").exponent == 1.5);

  const auto lazy = asymptotic_predictions(increment_stats(IncrementModel::builtin("lazy_right")));
  CHECK(*lazy.get("var_L").value == Approx(4.0).epsilon(1e-15));
  CHECK(*lazy.get("mean_A").value == 0.0);
}

TEST_CASE("variance bounds") {
  const BoundsReport b = variance_bounds(Mat2::identity());
  CHECK(round_sig_down(b.u0_identity_lower, 3) == Approx(2.65e-3).epsilon(1e-12));
  CHECK(round_sig_up(b.u0_upper, 3) == Approx(9.87).epsilon(1e-12));
  CHECK(round_sig_down(b.v0_lower, 3) == Approx(8.15e-7).epsilon(1e-12));
  CHECK(round_sig_up(b.v0_upper, 3) == Approx(5.22).epsilon(1e-12));
  CHECK(round_sig_down(b.vplus_lower, 3) == Approx(1.44e-6).epsilon(1e-12));
  CHECK(round_sig_up(b.vplus_upper, 3) == Approx(2.08).epsilon(1e-12));
  CHECK(b.u0_upper == Approx(kPi * kPi).epsilon(1e-15));
  CHECK_THROWS_AS(variance_bounds_for_trace(-1.0), InputError);
}

TEST_CASE("rounding helpers") {
  CHECK(round_sig_down(2.6589e-3, 3) == Approx(2.65e-3).epsilon(1e-15));
  CHECK(round_sig_up(9.8696, 3) == Approx(9.87).epsilon(1e-15));
  CHECK(round_sig_up(2.5, 3) == Approx(2.5).epsilon(1e-15));
}

TEST_CASE("pi sum") {
  CHECK(pi_sum_check(2) == Approx(1.0).epsilon(1e-15));
  CHECK(pi_sum_check(3) == Approx(kSqrt2).epsilon(1e-15));
  CHECK(std::fabs(pi_sum_check(1'000'000) - kPi) < 1e-2);
  CHECK_THROWS_AS(pi_sum_check(1), InputError);
}

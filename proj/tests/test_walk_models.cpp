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

#include "hullwalk/error.hpp"
#include "hullwalk/walk_models.hpp"

using namespace hullwalk;
using doctest::Approx;

TEST_CASE("built-in increment statistics") {
  const WalkStats ssrw = increment_stats(IncrementModel::builtin("ssrw_z2"));
  CHECK(ssrw.zero_drift());
  CHECK(ssrw.mu == Vec2{0, 0});
  CHECK(ssrw.sigma2 == 2.0);
  CHECK(max_abs_diff(ssrw.sigma_mat, Mat2::identity()) == 0.0);

  const WalkStats st = increment_stats(IncrementModel::builtin("spacetime_pm1"));
  CHECK(st.mu == Vec2{1, 0});
  CHECK(*st.sigma2_mu == 0.0);
  CHECK(*st.sigma2_perp == 1.0);

  const WalkStats lazy = increment_stats(IncrementModel::builtin("lazy_right"));
  CHECK(lazy.mu == Vec2{1, 0});
  CHECK(*lazy.sigma2_mu == 1.0);
  CHECK(*lazy.sigma2_perp == 0.0);
  CHECK(lazy.sigma2 == 1.0);

  const WalkStats g = increment_stats(IncrementModel::builtin("gaussian_std"));
  CHECK(g.zero_drift());
  CHECK(g.sigma2 == 2.0);

  const WalkStats sg = increment_stats(IncrementModel::builtin("spacetime_gauss"));
  CHECK(sg.mu == Vec2{1, 0});
  CHECK(*sg.sigma2_perp == 1.0);

  CHECK_THROWS_AS(IncrementModel::builtin("nope"), InputError);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(IncrementModel::atoms("bad", {{0.5, {1, 0}}, {0.4, {0, 1}}}), InputError);
  CHECK_THROWS_AS(IncrementModel::atoms("bad", {{1.0, {1, 0}}, {0.0, {0, 1}}}), InputError);
  CHECK_THROWS_AS(IncrementModel::atoms("bad", {{1.0, {NAN, 0}}}), InputError);
  CHECK_THROWS_AS(IncrementModel::gaussian("bad", {0, 0}, {1, 0.5, 0, 1}), InputError);
  CHECK_THROWS_AS(IncrementModel::gaussian("bad", {0, 0}, {1, 2, 2, 1}), InputError);
  CHECK_NOTHROW(IncrementModel::atoms("ok", {{1.0, {0, 0}}}));
}

TEST_CASE("matrix square root") {
  CHECK(max_abs_diff(matrix_sqrt(Mat2::identity()), Mat2::identity()) < 1e-15);
  CHECK(max_abs_diff(matrix_sqrt(Mat2::diag(4, 9)), Mat2::diag(2, 3)) < 1e-15);
  const Mat2 m{2, 1, 1, 2};
  const Mat2 r = matrix_sqrt(m);
  CHECK(std::fabs(r.b - r.c) < 1e-15);
  CHECK(max_abs_diff(r * r, m) < 1e-12);
  CHECK(max_abs_diff(matrix_sqrt(Mat2{}), Mat2{}) == 0.0);
  CHECK_THROWS_AS(matrix_sqrt(Mat2{1, 0, 0, -1}), InputError);
}

TEST_CASE("sampled paths") {
  RandomStream rng(3, 0);
  const PathSample lazy = sample_path(IncrementModel::builtin("lazy_right"), 500, rng);
  for (const Vec2 &s : lazy.points) {
    CHECK(s.y == 0.0);
    CHECK(s.x >= 0.0);
  }
  CHECK(area(convex_hull(lazy.points)) == 0.0);

  const PathSample st = sample_path(IncrementModel::builtin("spacetime_pm1"), 500, rng);
  for (std::size_t k = 0; k < st.points.size(); ++k) CHECK(st.points[k].x == double(k));

  const std::size_t n = 100000;
  const PathSample ssrw = sample_path(IncrementModel::builtin("ssrw_z2"), n, rng);
  const Vec2 mean = (1.0 / n) * ssrw.points.back();
  // Each coordinate of the increment has variance 1.
  CHECK(std::fabs(mean.x) <= 4 / std::sqrt(double(n)));
  CHECK(std::fabs(mean.y) <= 4 / std::sqrt(double(n)));

  CHECK_THROWS_AS(sample_path(IncrementModel::builtin("ssrw_z2"), 0, rng), InputError);
}

TEST_CASE("interpolated path") {
  RandomStream rng(4, 0);
  const PathSample p = sample_path(IncrementModel::builtin("gaussian_std"), 10, rng);
  const PolyPath f = interpolated_path(p);
  CHECK(f.at(0.0) == Vec2{0, 0});
  CHECK(norm(f.at(0.35) - 0.5 * (p.points[3] + p.points[4])) < 1e-12);
  CHECK(norm(f.at(1.0) - p.points.back()) < 1e-12);
}

TEST_CASE("zero-drift scaling") {
  const ConvexPolygon sq = convex_hull(std::vector<Vec2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(area(scale_zero_drift(sq, 4)) == 0.25);
  CHECK(perimeter(scale_zero_drift(sq, 4)) == 2.0);
  CHECK(scale_zero_drift(sq, 1).vertices()[2] == sq.vertices()[2]);

  RandomStream rng(5, 0);
  const ConvexPolygon p = convex_hull(sample_path(IncrementModel::builtin("ssrw_z2"), 300, rng).points);
  const ConvexPolygon s = scale_zero_drift(p, 300);
  CHECK(area(s) == Approx(area(p) / 300).epsilon(1e-13));
  CHECK(perimeter(s) == Approx(perimeter(p) / std::sqrt(300.0)).epsilon(1e-13));
}

TEST_CASE("drift scaling") {
  const WalkStats st = increment_stats(IncrementModel::builtin("spacetime_pm1"));
  CHECK(drift_scaling_map({4, 2}, 4, st) == Vec2{1, 1});

  const WalkStats rotated =
      increment_stats(IncrementModel::gaussian("rot", {0, 1}, Mat2::identity()));
  const Vec2 v = drift_scaling_map({0, 1}, 1, rotated);
  CHECK(v.x == Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(v.y) < 1e-15);

  const std::vector<Vec2> tri{{0, 0}, {5, 1}, {3, -2}};
  const ConvexPolygon p = convex_hull(tri);
  const WalkStats g = increment_stats(IncrementModel::gaussian("g", {0.6, 0.8}, Mat2{2, 0.5, 0.5, 1}));
  const double n = 9;
  const double expected = area(p) / (std::pow(n, 1.5) * norm(g.mu) * std::sqrt(*g.sigma2_perp));
  CHECK(area(scale_drift(p, 9, g)) == Approx(expected).epsilon(1e-13));

  CHECK_THROWS_AS(scale_drift(p, 9, increment_stats(IncrementModel::builtin("ssrw_z2"))),
                  InputError);
  CHECK_THROWS_AS(scale_drift(p, 9, increment_stats(IncrementModel::builtin("lazy_right"))),
                  InputError);
}

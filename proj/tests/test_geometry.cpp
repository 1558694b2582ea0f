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
#include "hullwalk/geometry.hpp"
#include "hullwalk/verify.hpp"

using namespace hullwalk;
using doctest::Approx;

namespace {
const std::vector<Vec2> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("hull of a triangle and of collinear points") {
  const std::vector<Vec2> tri{{0, 0}, {1, 0}, {0, 1}};
  const ConvexPolygon t = convex_hull(tri);
  CHECK(t.shape() == HullShape::full);
  CHECK(verify::sorted_vertices(t) == std::vector<Vec2>{{0, 0}, {0, 1}, {1, 0}});

  const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}};
  const ConvexPolygon s = convex_hull(line);
  CHECK(s.shape() == HullShape::segment);
  CHECK(verify::sorted_vertices(s) == std::vector<Vec2>{{0, 0}, {2, 2}});

  const std::vector<Vec2> same{{3, 4}, {3, 4}};
  CHECK(convex_hull(same).shape() == HullShape::point);
}

TEST_CASE("hull rejects bad input") {
  CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{}), InputError);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{{0, 0}, {NAN, 1}}), InputError);
  CHECK_THROWS_AS(convex_hull(std::vector<Vec2>{{0, 0}, {INFINITY, 1}}), InputError);
}

TEST_CASE("hull matches brute force on random lattice sets") {
  RandomStream rng(5, 0);
  for (int c = 0; c < 200; ++c) {
    const auto pts = verify::random_lattice_points(rng, 30, 10);
    CHECK(verify::sorted_vertices(convex_hull(pts)) == verify::brute_force_hull_vertices(pts));
  }
}

TEST_CASE("walk hull agrees with the plain hull") {
  RandomStream rng(6, 0);
  for (int c = 0; c < 50; ++c) {
    const auto pts = verify::random_walk_points(rng, 2000);
    CHECK(verify::sorted_vertices(walk_hull(pts)) == verify::sorted_vertices(convex_hull(pts)));
  }
}

TEST_CASE("area examples") {
  CHECK(area(convex_hull(kSquare)) == 1.0);
  CHECK(area(convex_hull(std::vector<Vec2>{{0, 0}, {2, 2}})) == 0.0);

  RandomStream rng(7, 0);
  const auto pts = verify::random_float_points(rng, 20, 1.0);
  const ConvexPolygon p = convex_hull(pts);
  // Rejection sampling in [-1, 1]^2.
  const int n = 400000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 x{2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
    hits += distance_to(p, x) == 0.0;
  }
  const double f = double(hits) / n;
  CHECK(std::fabs(4 * f - area(p)) <= 3 * 4 * std::sqrt(f * (1 - f) / n));
}

TEST_CASE("perimeter examples") {
  CHECK(perimeter(convex_hull(kSquare)) == 4.0);
  CHECK(perimeter(convex_hull(std::vector<Vec2>{{0, 0}, {2, 2}})) ==
        Approx(4 * std::sqrt(2.0)).epsilon(1e-15));
  std::vector<Vec2> hex;
  for (int i = 0; i < 6; ++i) hex.push_back({std::cos(i * kPi / 3), std::sin(i * kPi / 3)});
  CHECK(perimeter(convex_hull(hex)) == Approx(6.0).epsilon(1e-14));
  CHECK(perimeter(convex_hull(std::vector<Vec2>{{1, 1}})) == 0.0);
}

TEST_CASE("support function") {
  const ConvexPolygon sq = convex_hull(kSquare);
  CHECK(support_function(sq, kPi / 4) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  const ConvexPolygon pt = convex_hull(std::vector<Vec2>{{0, 0}});
  CHECK(support_function(pt, 1.234) == 0.0);

  RandomStream rng(8, 0);
  const auto pts = verify::random_float_points(rng, 25, 3.0);
  const ConvexPolygon p = convex_hull(pts);
  for (int i = 0; i < 360; ++i) {
    const double th = 2 * kPi * i / 360;
    const Vec2 e{std::cos(th), std::sin(th)};
    const double h = support_function(p, th);
    double best = -INFINITY;
    for (const Vec2 &v : pts) {
      CHECK(h >= dot(v, e) - 1e-12);
      best = std::max(best, dot(v, e));
    }
    CHECK(h == Approx(best).epsilon(1e-12));
  }
  CHECK_THROWS_AS(support_function(ConvexPolygon{}, 0.0), InputError);
}

TEST_CASE("cauchy perimeter") {
  CHECK(cauchy_perimeter(convex_hull(kSquare)) == Approx(4.0).epsilon(1e-12));
  CHECK(cauchy_perimeter(convex_hull(std::vector<Vec2>{{-0.5, 0}, {0.5, 0}})) ==
        Approx(2.0).epsilon(1e-12));
  RandomStream rng(9, 0);
  for (int c = 0; c < 100; ++c) {
    const ConvexPolygon p = convex_hull(verify::random_float_points(rng, 3 + c % 20, 5.0));
    CHECK(std::fabs(cauchy_perimeter(p) - perimeter(p)) <= 1e-9 * perimeter(p));
  }
}

TEST_CASE("hausdorff distance") {
  const ConvexPolygon a = convex_hull(kSquare);
  const ConvexPolygon b = convex_hull(std::vector<Vec2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  CHECK(hausdorff(a, b) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hausdorff(a, a) == 0.0);

  RandomStream rng(10, 0);
  for (int c = 0; c < 20; ++c) {
    const ConvexPolygon p = convex_hull(verify::random_float_points(rng, 12, 2.0));
    const ConvexPolygon q = convex_hull(verify::random_float_points(rng, 12, 2.0));
    const int grid = 4096;
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double th = 2 * kPi * i / grid;
      best = std::max(best, std::fabs(support_function(p, th) - support_function(q, th)));
    }
    // Support functions of sets within radius R are R-Lipschitz in the angle.
    const double lipschitz = 2 * std::sqrt(8.0) * (kPi / grid);
    const double rho = hausdorff(p, q);
    CHECK(rho >= best - 1e-12);
    CHECK(rho <= best + lipschitz);
  }
}

TEST_CASE("path sup distance") {
  const PolyPath f(std::vector<Vec2>{{0, 0}, {0, 0}});
  const PolyPath g(std::vector<Vec2>{{0, 0}, {1, 0}});
  CHECK(path_sup_distance(f, f) == 0.0);
  CHECK(path_sup_distance(f, g) == 1.0);
  CHECK_THROWS_AS(path_sup_distance(f, PolyPath(std::vector<Vec2>{{0, 0}, {1, 0}, {2, 0}})),
                  InputError);
  CHECK_THROWS_AS(PolyPath(std::vector<Vec2>{{1, 0}}), InputError);

  RandomStream rng(11, 0);
  for (int c = 0; c < 20; ++c) {
    const PolyPath p(verify::random_walk_points(rng, 30));
    const PolyPath q(verify::random_walk_points(rng, 30));
    const double sup = path_sup_distance(p, q);
    double sampled = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double t = i / 10000.0;
      sampled = std::max(sampled, norm(p.at(t) - q.at(t)));
    }
    CHECK(sup >= sampled - 1e-12);
  }
}

TEST_CASE("merge hulls") {
  const ConvexPolygon p = convex_hull(kSquare);
  CHECK(verify::sorted_vertices(merge_hulls(p, p)) == verify::sorted_vertices(p));
  const ConvexPolygon q = convex_hull(std::vector<Vec2>{{3, 0}, {4, 0}, {4, 1}, {3, 1}});
  CHECK(verify::sorted_vertices(merge_hulls(p, q)) ==
        std::vector<Vec2>{{0, 0}, {0, 1}, {4, 0}, {4, 1}});

  RandomStream rng(12, 0);
  const auto pts = verify::random_walk_points(rng, 10000);
  ConvexPolygon chunked = convex_hull(std::span(pts).subspan(0, 1001));
  for (std::size_t c = 1; c < 10; ++c) {
    chunked = merge_hulls(chunked, convex_hull(std::span(pts).subspan(c * 1000, 1001)));
  }
  CHECK(verify::sorted_vertices(chunked) == verify::sorted_vertices(convex_hull(pts)));
}

TEST_CASE("parallel body area") {
  RandomStream rng(13, 0);
  const McEstimate disk = parallel_body_area_mc(convex_hull(std::vector<Vec2>{{0, 0}}), 1.0,
                                                200000, rng);
  CHECK(std::fabs(disk.estimate - kPi) <= 3 * disk.standard_error);
  const McEstimate sq = parallel_body_area_mc(convex_hull(kSquare), 0.0, 10000, rng);
  CHECK(std::fabs(sq.estimate - 1.0) <= 3 * sq.standard_error + 1e-12);

  const ConvexPolygon p = convex_hull(verify::random_float_points(rng, 15, 1.0));
  const McEstimate e = parallel_body_area_mc(p, 0.5, 200000, rng);
  CHECK(std::fabs(e.estimate - (area(p) + 0.5 * perimeter(p) + kPi * 0.25)) <=
        3 * e.standard_error);

  CHECK_THROWS_AS(parallel_body_area_mc(p, -1.0, 10000, rng), InputError);
  CHECK_THROWS_AS(parallel_body_area_mc(p, 1.0, 10, rng), InputError);
}

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
#include <span>
#include <vector>

#include "hullwalk/rng.hpp"
#include "hullwalk/vec2.hpp"

namespace hullwalk {

/// Dimension of the affine span of a hull's vertices.
enum class HullShape { empty, point, segment, full };

const char *to_string(HullShape shape);

/// A compact convex set in the plane stored as its extreme points in
/// counterclockwise order, starting from the lexicographically smallest.
///
/// Invariants: shape == full implies at least 3 vertices with every
/// consecutive triple turning strictly left; segment implies exactly 2
/// distinct vertices; point exactly 1; empty none.
class ConvexPolygon {
public:
  ConvexPolygon() = default;

  /// Builds a polygon from vertices already known to satisfy the invariants
  /// (e.g. the image of a hull under an orientation-preserving affine map).
  /// Only the vertex count is checked.
  static ConvexPolygon from_ccw_vertices(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  HullShape shape() const { return shape_; }
  bool empty() const { return shape_ == HullShape::empty; }

private:
  std::vector<Vec2> vertices_;
  HullShape shape_ = HullShape::empty;
};

/// Convex hull by Andrew's monotone chain.
///
/// Collinear and duplicate points are dropped. Cross products are exact when
/// every coordinate is an integer of magnitude at most 2^25; otherwise a
/// turn counts as strictly left only when its cross product exceeds
/// 1e-12 times the squared extent of the input.
///
/// Throws InputError on empty input or non-finite coordinates.
ConvexPolygon convex_hull(std::span<const Vec2> points);

/// Same result as convex_hull, tuned for long walk paths: points strictly
/// inside the octagon spanned by the eight axis/diagonal extremes are
/// discarded before the chain, and the sort is skipped for input that is
/// already x-sorted (space-time walks).
ConvexPolygon walk_hull(std::span<const Vec2> points);

/// Hull of the union of the vertex sets of two hulls.
ConvexPolygon merge_hulls(const ConvexPolygon &p, const ConvexPolygon &q);

/// Lebesgue measure; zero for degenerate shapes.
double area(const ConvexPolygon &p);

/// Boundary length, counted twice for a segment so that Steiner's formula
/// A(P + rB) = A(P) + r L(P) + pi r^2 holds for every shape.
double perimeter(const ConvexPolygon &p);

/// h_P(theta) = max over vertices v of v . (cos theta, sin theta).
double support_function(const ConvexPolygon &p, double theta);
double support_function(const ConvexPolygon &p, const Vec2 &direction);

/// Perimeter as the integral of the support function over the unit circle,
/// evaluated exactly arc by arc (one maximizing vertex per arc).
double cauchy_perimeter(const ConvexPolygon &p);

/// Euclidean distance from x to the polygon (zero inside).
double distance_to(const ConvexPolygon &p, const Vec2 &x);

/// Hausdorff distance. Exact: the distance to a convex set is a convex
/// function, so its maximum over the other polygon sits at a vertex.
double hausdorff(const ConvexPolygon &p, const ConvexPolygon &q);

/// A continuous piecewise-linear path on [0, 1] starting at the origin.
/// Breakpoint i sits at time i / (size - 1).
class PolyPath {
public:
  explicit PolyPath(std::vector<Vec2> breakpoints);

  std::span<const Vec2> breakpoints() const { return breakpoints_; }
  std::size_t size() const { return breakpoints_.size(); }

  /// Position at time t in [0, 1].
  Vec2 at(double t) const;

private:
  std::vector<Vec2> breakpoints_;
};

/// sup_t |f(t) - g(t)| for paths on the same breakpoint grid. The difference
/// is linear on each piece, so its norm is convex there and the supremum is
/// attained at a breakpoint.
double path_sup_distance(const PolyPath &f, const PolyPath &g);

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Rejection-sampling estimate of the area of the parallel body
/// {x : dist(x, P) <= r} over its bounding box, with binomial standard error.
McEstimate parallel_body_area_mc(const ConvexPolygon &p, double r, std::size_t samples,
                                 RandomStream &rng);

} // namespace hullwalk

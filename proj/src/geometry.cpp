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

#include "hullwalk/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hullwalk/error.hpp"

namespace hullwalk {

namespace {

// Integers up to this magnitude have exact pairwise differences, products
// and cross products in double arithmetic.
constexpr double kExactIntegerLimit = 33554432.0; // 2^25
constexpr double kRelativeCollinearEps = 1e-12;

struct InputScan {
  double eps = 0.0;
  Vec2 lo, hi;
};

InputScan scan_input(std::span<const Vec2> points) {
  if (points.empty()) {
    throw InputError("empty point set");
  }
  InputScan s;
  s.lo = s.hi = points.front();
  bool integral = true;
  for (const Vec2 &p : points) {
    if (!is_finite(p)) {
      throw InputError("non-finite input");
    }
    s.lo.x = std::min(s.lo.x, p.x);
    s.lo.y = std::min(s.lo.y, p.y);
    s.hi.x = std::max(s.hi.x, p.x);
    s.hi.y = std::max(s.hi.y, p.y);
    if (integral && (p.x != std::trunc(p.x) || p.y != std::trunc(p.y) ||
                     std::fabs(p.x) > kExactIntegerLimit ||
                     std::fabs(p.y) > kExactIntegerLimit)) {
      integral = false;
    }
  }
  if (!integral) {
    const double extent = std::max(s.hi.x - s.lo.x, s.hi.y - s.lo.y);
    s.eps = kRelativeCollinearEps * extent * extent;
  }
  return s;
}

// Monotone chain over a mutable working set; sorts it unless already sorted.
ConvexPolygon monotone_chain(std::vector<Vec2> &pts, double eps) {
  if (!std::is_sorted(pts.begin(), pts.end())) {
    std::sort(pts.begin(), pts.end());
  }
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) {
    return ConvexPolygon::from_ccw_vertices({pts.front()});
  }

  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2 &p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= eps) {
      --k;
    }
    hull[k++] = p;
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    const Vec2 &p = pts[i];
    while (k >= lower_end && orient(hull[k - 2], hull[k - 1], p) <= eps) {
      --k;
    }
    hull[k++] = p;
  }
  hull.resize(k - 1); // last point repeats the first
  if (hull.size() < 3) {
    return ConvexPolygon::from_ccw_vertices({pts.front(), pts.back()});
  }
  return ConvexPolygon::from_ccw_vertices(std::move(hull));
}

double point_segment_distance(const Vec2 &x, const Vec2 &a, const Vec2 &b) {
  const Vec2 ab = b - a;
  const double len2 = norm2(ab);
  if (len2 == 0.0) {
    return norm(x - a);
  }
  const double t = std::clamp(dot(x - a, ab) / len2, 0.0, 1.0);
  return norm(x - (a + t * ab));
}

} // namespace

const char *to_string(HullShape shape) {
  switch (shape) {
  case HullShape::empty:
    return "empty";
  case HullShape::point:
    return "point";
  case HullShape::segment:
    return "segment";
  case HullShape::full:
    return "full";
  }
  return "unknown";
}

ConvexPolygon ConvexPolygon::from_ccw_vertices(std::vector<Vec2> vertices) {
  ConvexPolygon p;
  switch (vertices.size()) {
  case 0:
    p.shape_ = HullShape::empty;
    break;
  case 1:
    p.shape_ = HullShape::point;
    break;
  case 2:
    if (vertices[0] == vertices[1]) {
      throw InputError("segment with coincident endpoints");
    }
    p.shape_ = HullShape::segment;
    break;
  default:
    p.shape_ = HullShape::full;
  }
  std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()),
              vertices.end());
  p.vertices_ = std::move(vertices);
  return p;
}

ConvexPolygon convex_hull(std::span<const Vec2> points) {
  const InputScan scan = scan_input(points);
  std::vector<Vec2> pts(points.begin(), points.end());
  return monotone_chain(pts, scan.eps);
}

ConvexPolygon walk_hull(std::span<const Vec2> points) {
  const InputScan scan = scan_input(points);
  if (points.size() < 16) {
    std::vector<Vec2> pts(points.begin(), points.end());
    return monotone_chain(pts, scan.eps);
  }

  // Extremes of x, y, x + y and x - y.
  std::array<Vec2, 8> ext;
  ext.fill(points.front());
  for (const Vec2 &p : points) {
    if (p.x < ext[0].x) ext[0] = p;
    if (p.x > ext[1].x) ext[1] = p;
    if (p.y < ext[2].y) ext[2] = p;
    if (p.y > ext[3].y) ext[3] = p;
    if (p.x + p.y < ext[4].x + ext[4].y) ext[4] = p;
    if (p.x + p.y > ext[5].x + ext[5].y) ext[5] = p;
    if (p.x - p.y < ext[6].x - ext[6].y) ext[6] = p;
    if (p.x - p.y > ext[7].x - ext[7].y) ext[7] = p;
  }
  std::vector<Vec2> ext_pts(ext.begin(), ext.end());
  const ConvexPolygon octagon = monotone_chain(ext_pts, 0.0);

  std::vector<Vec2> kept;
  if (octagon.shape() != HullShape::full) {
    kept.assign(points.begin(), points.end());
  } else {
    const auto oct = octagon.vertices();
    const std::size_t m = oct.size();
    kept.reserve(points.size() / 8 + 16);
    for (const Vec2 &p : points) {
      bool inside = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (orient(oct[i], oct[(i + 1) % m], p) <= 0.0) {
          inside = false;
          break;
        }
      }
      if (!inside) {
        kept.push_back(p);
      }
    }
  }
  return monotone_chain(kept, scan.eps);
}

ConvexPolygon merge_hulls(const ConvexPolygon &p, const ConvexPolygon &q) {
  std::vector<Vec2> pts;
  pts.reserve(p.size() + q.size());
  pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  if (pts.empty()) {
    return {};
  }
  return convex_hull(pts);
}

double area(const ConvexPolygon &p) {
  if (p.shape() != HullShape::full) {
    return 0.0;
  }
  const auto v = p.vertices();
  // Shoelace relative to the first vertex keeps the terms small.
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    twice += orient(v[0], v[i], v[i + 1]);
  }
  return 0.5 * twice;
}

double perimeter(const ConvexPolygon &p) {
  const auto v = p.vertices();
  switch (p.shape()) {
  case HullShape::empty:
  case HullShape::point:
    return 0.0;
  case HullShape::segment:
    return 2.0 * norm(v[1] - v[0]);
  case HullShape::full:
    break;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += norm(v[(i + 1) % v.size()] - v[i]);
  }
  return total;
}

double support_function(const ConvexPolygon &p, const Vec2 &direction) {
  if (p.empty()) {
    throw InputError("support function of an empty polygon");
  }
  double best = dot(p.vertices().front(), direction);
  for (const Vec2 &v : p.vertices()) {
    best = std::max(best, dot(v, direction));
  }
  return best;
}

double support_function(const ConvexPolygon &p, double theta) {
  return support_function(p, Vec2{std::cos(theta), std::sin(theta)});
}

double cauchy_perimeter(const ConvexPolygon &p) {
  if (p.empty()) {
    throw InputError("cauchy perimeter of an empty polygon");
  }
  const auto v = p.vertices();
  const std::size_t m = v.size();
  if (m == 1) {
    return 0.0;
  }
  Vec2 centroid;
  for (const Vec2 &x : v) {
    centroid += x;
  }
  centroid = (1.0 / static_cast<double>(m)) * centroid;

  // Outward normal angle of edge i (from v[i] to v[i+1]); a segment is the
  // two-edge polygon p -> q -> p.
  std::vector<double> normal(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 e = v[(i + 1) % m] - v[i];
    normal[i] = std::atan2(e.y, e.x) - 0.5 * std::numbers::pi;
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    // v[i] attains the support value between the normals of its two edges.
    const double from = normal[(i + m - 1) % m];
    double width = std::remainder(normal[i] - from, two_pi);
    if (width <= 0.0) {
      width += two_pi;
    }
    const double to = from + width;
    const Vec2 w = v[i] - centroid;
    total += w.x * (std::sin(to) - std::sin(from)) - w.y * (std::cos(to) - std::cos(from));
  }
  return total;
}

double distance_to(const ConvexPolygon &p, const Vec2 &x) {
  const auto v = p.vertices();
  switch (p.shape()) {
  case HullShape::empty:
    throw InputError("distance to an empty polygon");
  case HullShape::point:
    return norm(x - v[0]);
  case HullShape::segment:
    return point_segment_distance(x, v[0], v[1]);
  case HullShape::full:
    break;
  }
  const std::size_t m = v.size();
  bool inside = true;
  for (std::size_t i = 0; i < m && inside; ++i) {
    inside = orient(v[i], v[(i + 1) % m], x) >= 0.0;
  }
  if (inside) {
    return 0.0;
  }
  double best = point_segment_distance(x, v[0], v[1]);
  for (std::size_t i = 1; i < m; ++i) {
    best = std::min(best, point_segment_distance(x, v[i], v[(i + 1) % m]));
  }
  return best;
}

double hausdorff(const ConvexPolygon &p, const ConvexPolygon &q) {
  if (p.empty() || q.empty()) {
    throw InputError("hausdorff distance with an empty polygon");
  }
  double d = 0.0;
  for (const Vec2 &x : p.vertices()) {
    d = std::max(d, distance_to(q, x));
  }
  for (const Vec2 &y : q.vertices()) {
    d = std::max(d, distance_to(p, y));
  }
  return d;
}

PolyPath::PolyPath(std::vector<Vec2> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) {
    throw InputError("path needs at least one breakpoint");
  }
  if (breakpoints_.front() != Vec2{}) {
    throw InputError("path must start at the origin");
  }
  for (const Vec2 &b : breakpoints_) {
    if (!is_finite(b)) {
      throw InputError("non-finite input");
    }
  }
}

Vec2 PolyPath::at(double t) const {
  if (breakpoints_.size() == 1) {
    return breakpoints_.front();
  }
  const double pieces = static_cast<double>(breakpoints_.size() - 1);
  const double s = std::clamp(t, 0.0, 1.0) * pieces;
  const auto k = std::min(static_cast<std::size_t>(s), breakpoints_.size() - 2);
  const double frac = s - static_cast<double>(k);
  return breakpoints_[k] + frac * (breakpoints_[k + 1] - breakpoints_[k]);
}

double path_sup_distance(const PolyPath &f, const PolyPath &g) {
  if (f.size() != g.size()) {
    throw InputError("mismatched grids");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    d = std::max(d, norm(f.breakpoints()[i] - g.breakpoints()[i]));
  }
  return d;
}

McEstimate parallel_body_area_mc(const ConvexPolygon &p, double r, std::size_t samples,
                                 RandomStream &rng) {
  if (!(r >= 0.0)) {
    throw InputError("parallel body radius must be nonnegative");
  }
  if (p.empty()) {
    throw InputError("parallel body of an empty polygon");
  }
  if (samples < 1000) {
    throw InputError("parallel body estimate needs at least 1000 samples");
  }
  Vec2 lo = p.vertices().front();
  Vec2 hi = lo;
  for (const Vec2 &v : p.vertices()) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  lo -= Vec2{r, r};
  hi += Vec2{r, r};
  const double box = (hi.x - lo.x) * (hi.y - lo.y);
  if (box == 0.0) {
    return {};
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec2 x{lo.x + (hi.x - lo.x) * rng.uniform(), lo.y + (hi.y - lo.y) * rng.uniform()};
    if (distance_to(p, x) <= r) {
      ++hits;
    }
  }
  const double n = static_cast<double>(samples);
  const double frac = static_cast<double>(hits) / n;
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / n)};
}

} // namespace hullwalk

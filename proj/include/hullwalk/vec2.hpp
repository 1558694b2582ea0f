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

#include <cmath>

namespace hullwalk {

/// A point or displacement in the plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 &operator+=(const Vec2 &o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2 &operator-=(const Vec2 &o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2 &b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2 &b) { return a -= b; }
  friend constexpr Vec2 operator*(double s, const Vec2 &v) {
    return {s * v.x, s * v.y};
  }
  friend constexpr Vec2 operator*(const Vec2 &v, double s) { return s * v; }
  friend constexpr bool operator==(const Vec2 &, const Vec2 &) = default;
  friend constexpr bool operator<(const Vec2 &a, const Vec2 &b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

constexpr double dot(const Vec2 &a, const Vec2 &b) { return a.x * b.x + a.y * b.y; }

/// z-component of the planar cross product a × b.
constexpr double cross(const Vec2 &a, const Vec2 &b) { return a.x * b.y - a.y * b.x; }

/// Orientation of the triple (o, a, b); positive for a counterclockwise turn.
constexpr double orient(const Vec2 &o, const Vec2 &a, const Vec2 &b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double norm(const Vec2 &v) { return std::hypot(v.x, v.y); }
constexpr double norm2(const Vec2 &v) { return v.x * v.x + v.y * v.y; }

/// Rotation by +pi/2.
constexpr Vec2 perp(const Vec2 &v) { return {-v.y, v.x}; }

inline bool is_finite(const Vec2 &v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Symmetric-or-not 2x2 matrix, row major.
struct Mat2 {
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

  constexpr double trace() const { return a + d; }
  constexpr double det() const { return a * d - b * c; }

  friend constexpr Mat2 operator*(const Mat2 &m, const Mat2 &n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend constexpr Vec2 operator*(const Mat2 &m, const Vec2 &v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend constexpr bool operator==(const Mat2 &, const Mat2 &) = default;
};

/// Largest absolute entry of m - n.
inline double max_abs_diff(const Mat2 &m, const Mat2 &n) {
  return std::fmax(std::fmax(std::fabs(m.a - n.a), std::fabs(m.b - n.b)),
                   std::fmax(std::fabs(m.c - n.c), std::fabs(m.d - n.d)));
}

} // namespace hullwalk

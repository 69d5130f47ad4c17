// Copyright 2026 The compss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace compss {

/// Default absolute tolerance for coordinate comparisons.
inline constexpr double kEps = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Lexicographic (x, then y) ordering used for deterministic tie-breaks.
constexpr bool lex_less(Vec2 a, Vec2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Twice the signed area of triangle abc; positive when counterclockwise.
constexpr double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

/// A simple polygon as an implicitly closed vertex ring.
using Polygon = std::vector<Vec2>;

/// A polyline; `closed` adds the implicit edge back to the first vertex.
struct Polyline {
  std::vector<Vec2> points;
  bool closed = false;

  std::size_t segment_count() const {
    if (points.size() < 2) return 0;
    return closed ? points.size() : points.size() - 1;
  }
  Vec2 segment_start(std::size_t i) const { return points[i]; }
  Vec2 segment_end(std::size_t i) const {
    return points[(i + 1) % points.size()];
  }
};

struct Box {
  Vec2 min{HUGE_VAL, HUGE_VAL};
  Vec2 max{-HUGE_VAL, -HUGE_VAL};

  bool empty() const { return min.x > max.x || min.y > max.y; }
  void expand(Vec2 p);
  void expand(const Box& b);
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diameter() const { return empty() ? 0.0 : norm(max - min); }
  Vec2 center() const { return (min + max) * 0.5; }
  /// Euclidean gap between two boxes, 0 when they overlap or touch.
  double distance_to(const Box& b) const;
};

Box bounding_box(std::span<const Vec2> pts);

double signed_area(std::span<const Vec2> poly);
double perimeter(std::span<const Vec2> poly);
/// Area centroid of a simple polygon (vertex mean when area vanishes).
Vec2 centroid(std::span<const Vec2> poly);
bool is_convex(std::span<const Vec2> poly);
/// True when no two non-adjacent edges touch and no adjacent edges overlap.
bool is_simple(std::span<const Vec2> poly);

struct ClosestPair {
  double distance = HUGE_VAL;
  Vec2 a;  ///< point on the first object
  Vec2 b;  ///< point on the second object
};

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b, Vec2* closest = nullptr);
/// True when the closed segments ab and cd share at least one point.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
ClosestPair segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
/// Exact polygon-polygon distance: minimum over all edge pairs, 0 when one
/// polygon contains a vertex of the other.
ClosestPair polygon_distance(std::span<const Vec2> p, std::span<const Vec2> q);

enum class Containment { kOutside, kInside, kOnBoundary };

/// Crossing-number point location; points within `tol` of an edge count as
/// on the boundary.
Containment locate_point(Vec2 p, std::span<const Vec2> poly, double tol = kEps);

/// Andrew's monotone chain; counterclockwise, no collinear vertices.
std::vector<Vec2> convex_hull(std::span<const Vec2> pts);

struct Diameter {
  double length = 0.0;
  Vec2 a;
  Vec2 b;
};

/// Polygon diameter by rotating calipers over the convex hull.
Diameter polygon_diameter(std::span<const Vec2> pts);

struct Circle {
  Vec2 center;
  double radius = 0.0;
};

/// Largest inscribed circle of a convex counterclockwise polygon (the
/// Chebyshev center of its edge half-planes), solved as a three-variable
/// linear program.
Circle chebyshev_center(std::span<const Vec2> convex_ccw);

/// Returns the polygon with counterclockwise orientation.
Polygon to_ccw(Polygon poly);

}  // namespace compss

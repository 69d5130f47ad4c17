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

#include "compss/geometry.hpp"

#include <algorithm>
#include <cassert>

#include "compss/error.hpp"

namespace compss {

void Box::expand(Vec2 p) {
  min.x = std::min(min.x, p.x);
  min.y = std::min(min.y, p.y);
  max.x = std::max(max.x, p.x);
  max.y = std::max(max.y, p.y);
}

void Box::expand(const Box& b) {
  if (b.empty()) return;
  expand(b.min);
  expand(b.max);
}

double Box::distance_to(const Box& b) const {
  const double dx = std::max({0.0, b.min.x - max.x, min.x - b.max.x});
  const double dy = std::max({0.0, b.min.y - max.y, min.y - b.max.y});
  return std::hypot(dx, dy);
}

Box bounding_box(std::span<const Vec2> pts) {
  Box b;
  for (Vec2 p : pts) b.expand(p);
  return b;
}

double signed_area(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice += cross(poly[i], poly[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double perimeter(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  double len = 0.0;
  for (std::size_t i = 0; i < n; ++i) len += distance(poly[i], poly[(i + 1) % n]);
  return len;
}

Vec2 centroid(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  if (n == 0) return {};
  // Shift to the first vertex to keep the accumulation well conditioned.
  const Vec2 o = poly[0];
  double a2 = 0.0;
  Vec2 acc;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = poly[i] - o;
    const Vec2 q = poly[(i + 1) % n] - o;
    const double c = cross(p, q);
    a2 += c;
    acc = acc + (p + q) * c;
  }
  if (std::abs(a2) < 1e-300) {
    Vec2 mean;
    for (Vec2 p : poly) mean = mean + p;
    return mean / static_cast<double>(n);
  }
  return o + acc / (3.0 * a2);
}

bool is_convex(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    const Vec2 c = poly[(i + 2) % n];
    const double o = orient(a, b, c);
    const double scale = norm(b - a) * norm(c - b);
    if (std::abs(o) <= 1e-12 * scale) continue;
    const int s = o > 0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  return sign != 0;
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

bool on_segment_collinear(Vec2 p, Vec2 a, Vec2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = sign_of(orient(a, b, c));
  const int o2 = sign_of(orient(a, b, d));
  const int o3 = sign_of(orient(c, d, a));
  const int o4 = sign_of(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment_collinear(c, a, b)) return true;
  if (o2 == 0 && on_segment_collinear(d, a, b)) return true;
  if (o3 == 0 && on_segment_collinear(a, c, d)) return true;
  if (o4 == 0 && on_segment_collinear(b, c, d)) return true;
  return false;
}

bool is_simple(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return false;
  }
  if (std::abs(signed_area(poly)) <= 0.0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    // Adjacent edge folding back onto this one.
    const Vec2 c = poly[(i + 2) % n];
    if (orient(a, b, c) == 0.0 && dot(b - a, c - b) < 0.0) return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (segments_intersect(a, b, poly[j], poly[(j + 1) % n])) return false;
    }
  }
  return true;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b, Vec2* closest) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  const Vec2 q = t == 1.0 ? b : a + ab * t;
  if (closest != nullptr) *closest = q;
  return distance(p, q);
}

ClosestPair segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_intersect(a, b, c, d)) {
    // Report a shared point: a proper crossing point, or an endpoint lying
    // on the other segment when the contact is degenerate.
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const double denom = cross(r, s);
    if (denom != 0.0) {
      const double t = std::clamp(cross(c - a, s) / denom, 0.0, 1.0);
      const Vec2 p = a + r * t;
      return {0.0, p, p};
    }
    for (Vec2 p : {c, d}) {
      if (orient(a, b, p) == 0.0 && on_segment_collinear(p, a, b)) return {0.0, p, p};
    }
    return {0.0, a, a};
  }
  ClosestPair best;
  Vec2 q;
  double dist = point_segment_distance(a, c, d, &q);
  if (dist < best.distance) best = {dist, a, q};
  dist = point_segment_distance(b, c, d, &q);
  if (dist < best.distance) best = {dist, b, q};
  dist = point_segment_distance(c, a, b, &q);
  if (dist < best.distance) best = {dist, q, c};
  dist = point_segment_distance(d, a, b, &q);
  if (dist < best.distance) best = {dist, q, d};
  return best;
}

ClosestPair polygon_distance(std::span<const Vec2> p, std::span<const Vec2> q) {
  ClosestPair best;
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = p[i];
    const Vec2 b = p[(i + 1) % n];
    for (std::size_t j = 0; j < m; ++j) {
      const ClosestPair cp = segment_segment_distance(a, b, q[j], q[(j + 1) % m]);
      if (cp.distance < best.distance) {
        best = cp;
        if (best.distance == 0.0) return best;
      }
    }
  }
  if (n > 0 && m > 0) {
    if (locate_point(q[0], p, 0.0) == Containment::kInside) return {0.0, q[0], q[0]};
    if (locate_point(p[0], q, 0.0) == Containment::kInside) return {0.0, p[0], p[0]};
  }
  return best;
}

Containment locate_point(Vec2 p, std::span<const Vec2> poly, double tol) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[j];
    const Vec2 b = poly[i];
    if (point_segment_distance(p, a, b) <= tol) return Containment::kOnBoundary;
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Containment::kInside : Containment::kOutside;
}

std::vector<Vec2> convex_hull(std::span<const Vec2> pts) {
  std::vector<Vec2> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Vec2> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

Diameter polygon_diameter(std::span<const Vec2> pts) {
  const std::vector<Vec2> h = convex_hull(pts);
  const std::size_t m = h.size();
  if (m == 0) return {};
  if (m == 1) return {0.0, h[0], h[0]};
  if (m == 2) return {distance(h[0], h[1]), h[0], h[1]};
  Diameter best;
  auto consider = [&](Vec2 a, Vec2 b) {
    const double d = distance(a, b);
    if (d > best.length) best = {d, a, b};
  };
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = h[i];
    const Vec2 b = h[(i + 1) % m];
    while (std::abs(orient(a, b, h[(j + 1) % m])) > std::abs(orient(a, b, h[j]))) {
      j = (j + 1) % m;
    }
    consider(a, h[j]);
    consider(b, h[j]);
  }
  return best;
}

Circle chebyshev_center(std::span<const Vec2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw DomainError("chebyshev_center: polygon needs at least 3 vertices");
  // maximize r  s.t.  normal_i . (g + d) + r <= normal_i . p_i
  // with d = (u0 - u1, u2 - u3), all of u, r >= 0 and g the centroid, so the
  // all-slack basis is feasible.
  const Vec2 g = centroid(poly);
  constexpr std::size_t kVars = 5;
  const std::size_t cols = kVars + n + 1;
  std::vector<std::vector<double>> tab(n, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    const Vec2 e = b - a;
    const double len = norm(e);
    if (len == 0.0) throw DomainError("chebyshev_center: repeated vertex");
    const Vec2 nrm{e.y / len, -e.x / len};
    auto& row = tab[i];
    row[0] = nrm.x;
    row[1] = -nrm.x;
    row[2] = nrm.y;
    row[3] = -nrm.y;
    row[4] = 1.0;
    row[kVars + i] = 1.0;
    row[cols - 1] = std::max(0.0, dot(nrm, a - g));
    basis[i] = kVars + i;
  }
  std::vector<double> cost(cols - 1, 0.0);
  cost[4] = 1.0;

  constexpr double kPivotTol = 1e-13;
  for (int iter = 0; iter < 10000; ++iter) {
    // Reduced costs c_j - c_B B^-1 A_j with Bland's rule for entering.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      double rc = cost[j];
      for (std::size_t i = 0; i < n; ++i) rc -= cost[basis[i]] * tab[i][j];
      if (rc > kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    double best_ratio = HUGE_VAL;
    for (std::size_t i = 0; i < n; ++i) {
      if (tab[i][enter] <= kPivotTol) continue;
      best_ratio = std::min(best_ratio, tab[i][cols - 1] / tab[i][enter]);
    }
    std::size_t leave = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (tab[i][enter] <= kPivotTol) continue;
      if (tab[i][cols - 1] / tab[i][enter] > best_ratio + 1e-15) continue;
      if (leave == n || basis[i] < basis[leave]) leave = i;
    }
    if (leave == n) throw NumericalError("chebyshev_center: unbounded program");
    const double piv = tab[leave][enter];
    for (double& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave) continue;
      const double f = tab[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  double u[kVars] = {0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i] < kVars) u[basis[i]] = tab[i][cols - 1];
  }
  return {g + Vec2{u[0] - u[1], u[2] - u[3]}, u[4]};
}

Polygon to_ccw(Polygon poly) {
  if (signed_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
  return poly;
}

}  // namespace compss

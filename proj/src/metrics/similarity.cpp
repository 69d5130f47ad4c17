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

#include <algorithm>
#include <cmath>
#include <limits>

#include "compss/error.hpp"
#include "compss/metrics.hpp"

namespace compss {

namespace {

// Coordinates closer than this compare equal when picking the least sequence.
constexpr double kOrderSlack = 1e-9;

// All 2n normalised placements: start vertex i's edge along +x, optionally
// mirrored first.
std::vector<Polygon> alignments(std::span<const Vec2> polygon) {
  const Polygon poly = to_ccw(Polygon(polygon.begin(), polygon.end()));
  const std::size_t n = poly.size();
  const Vec2 g = centroid(poly);
  const double diam = polygon_diameter(poly).length;
  if (n < 3 || !(diam > 0.0)) throw DomainError("canonical_form: degenerate polygon");

  std::vector<Polygon> out;
  out.reserve(2 * n);
  for (bool mirror : {false, true}) {
    Polygon base(n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec2 q = (poly[k] - g) / diam;
      if (mirror) q.y = -q.y;
      base[k] = q;
    }
    if (mirror) std::reverse(base.begin(), base.end());
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 e = base[(i + 1) % n] - base[i];
      const double len = norm(e);
      const double c = e.x / len;
      const double s = -e.y / len;
      Polygon rot(n);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec2 v = base[(i + k) % n];
        rot[k] = {c * v.x - s * v.y, s * v.x + c * v.y};
      }
      out.push_back(std::move(rot));
    }
  }
  return out;
}

bool sequence_less(const Polygon& a, const Polygon& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].x - b[k].x) > kOrderSlack) return a[k].x < b[k].x;
    if (std::abs(a[k].y - b[k].y) > kOrderSlack) return a[k].y < b[k].y;
  }
  return false;
}

double max_vertex_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, distance(a[k], b[k]));
  return worst;
}

}  // namespace

Polygon canonical_form(std::span<const Vec2> polygon) {
  std::vector<Polygon> all = alignments(polygon);
  std::size_t best = 0;
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (sequence_less(all[k], all[best])) best = k;
  }
  return std::move(all[best]);
}

double shape_distance(std::span<const Vec2> canonical, std::span<const Vec2> other) {
  if (canonical.size() != other.size()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (const Polygon& a : alignments(other)) best = std::min(best, max_vertex_distance(canonical, a));
  return best;
}

SimilarityPartition similarity_classes(const Scene& scene, double tolerance) {
  if (!(tolerance > 0.0)) throw BoundsError("similarity tolerance must be > 0");
  SimilarityPartition part;
  part.class_of.reserve(scene.components.size());
  for (const Component& c : scene.components) {
    int cls = -1;
    for (std::size_t k = 0; k < part.representatives.size(); ++k) {
      if (shape_distance(part.representatives[k], c.polygon) < tolerance) {
        cls = static_cast<int>(k);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(part.representatives.size());
      part.representatives.push_back(canonical_form(c.polygon));
      part.classes.emplace_back();
    }
    part.class_of.push_back(cls);
    part.classes[cls].push_back(c.id);
  }
  for (auto& ids : part.classes) std::sort(ids.begin(), ids.end());
  return part;
}

}  // namespace compss

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

#include "compss/topology.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "compss/error.hpp"

namespace compss {

namespace {

constexpr double kOnLoop = 1e-12;
constexpr double kResidual = 1e-6;

}  // namespace

Vec2 radial_map(Vec2 w, Vec2 x) {
  const Vec2 d = x - w;
  const double len = norm(d);
  if (len == 0.0) throw DomainError("radial_map: x coincides with w");
  return d / len;
}

int winding_number(std::span<const Vec2> loop, Vec2 w) {
  const std::size_t n = loop.size();
  if (n == 0) return 0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = loop[i];
    const Vec2 b = loop[(i + 1) % n];
    if (point_segment_distance(w, a, b) <= kOnLoop) {
      throw DomainError("winding_number: point lies on the loop");
    }
    const Vec2 u = a - w;
    const Vec2 v = b - w;
    total += std::atan2(cross(u, v), dot(u, v));
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= kResidual) {
    throw NumericalError("winding_number: residual " + std::to_string(std::abs(turns - rounded)) +
                         " exceeds 1e-6");
  }
  return static_cast<int>(rounded);
}

bool homotopy_equivalent(const LabeledGrid& labeled, Vec2 w, Vec2 z) {
  return component_of_point(labeled, w) == component_of_point(labeled, z);
}

RadialMapQuery radial_query(const Scene& scene, Vec2 w, const DistanceField* field) {
  RadialMapQuery q;
  q.w = w;
  q.dist_to_e = std::numeric_limits<double>::infinity();
  for (const Polyline& pl : scene.boundary) {
    if (pl.points.size() == 1) {
      const double d = distance(w, pl.points[0]);
      if (d < q.dist_to_e) {
        q.dist_to_e = d;
        q.nearest = pl.points[0];
      }
    }
    for (std::size_t s = 0; s < pl.segment_count(); ++s) {
      Vec2 c;
      const double d = point_segment_distance(w, pl.segment_start(s), pl.segment_end(s), &c);
      if (d < q.dist_to_e) {
        q.dist_to_e = d;
        q.nearest = c;
      }
    }
  }
  if (!std::isfinite(q.dist_to_e)) throw DomainError("radial_query: E is empty");
  if (q.dist_to_e <= kOnLoop || in_solid(scene, w, kOnLoop)) throw DomainError("radial_query: w lies on E");
  q.lipschitz_bound = 1.0 / q.dist_to_e;
  if (field != nullptr) {
    if (const auto cell = field->geom.cell_of(w)) q.raster_distance = field->distance(cell->i, cell->j);
  }
  return q;
}

}  // namespace compss

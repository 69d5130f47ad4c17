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

#include <cmath>

#include "compss/error.hpp"
#include "compss/metrics.hpp"

namespace compss {

namespace {

// Largest distance-field value over cells whose centre is strictly inside
// the polygon.
Circle raster_inradius(std::span<const Vec2> poly, double diameter, int cells) {
  const double resolution = std::max(16.0, cells / diameter);
  const Polyline ring{Polygon(poly.begin(), poly.end()), true};
  const Grid grid = rasterize(std::span<const Polyline>(&ring, 1), bounding_box(poly), resolution);
  const DistanceField field = distance_to_set(grid);
  const GridGeometry& g = grid.geom;
  Circle best{centroid(poly), 0.0};
  std::uint32_t best_sq = 0;
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const std::uint32_t sq = field.squared[g.index(i, j)];
      if (sq <= best_sq) continue;
      if (locate_point(g.center(i, j), poly, 0.0) != Containment::kInside) continue;
      best_sq = sq;
      best = {g.center(i, j), field.distance(i, j)};
    }
  }
  return best;
}

}  // namespace

ShapeMetrics shape_metrics(std::span<const Vec2> polygon, const ShapeOptions& options) {
  if (polygon.size() < 3 || std::abs(signed_area(polygon)) < 1e-12) {
    throw DomainError("shape_metrics: degenerate polygon (area < 1e-12)");
  }
  ShapeMetrics m;
  m.diameter_pair = polygon_diameter(polygon);
  m.diameter = m.diameter_pair.length;
  m.convex = is_convex(polygon);
  if (m.convex) {
    const Polygon ccw = to_ccw(Polygon(polygon.begin(), polygon.end()));
    const Circle c = chebyshev_center(ccw);
    m.incenter = c.center;
    m.inradius = c.radius;
  } else {
    const Circle c = raster_inradius(polygon, m.diameter, options.nonconvex_cells);
    m.incenter = c.center;
    m.inradius = c.radius;
    const double resolution = std::max(16.0, options.nonconvex_cells / m.diameter);
    m.inradius_error = std::sqrt(2.0) / resolution;
  }
  m.roundness = m.inradius / m.diameter;
  return m;
}

ShapeMetrics shape_metrics(const Component& component, const ShapeOptions& options) {
  return shape_metrics(component.polygon, options);
}

}  // namespace compss

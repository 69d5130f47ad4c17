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
#include <map>

#include "compss/error.hpp"
#include "compss/metrics.hpp"

namespace compss {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kOnE = 1e-9;

struct BoundarySample {
  Vec2 p;
  double arc;  ///< arc length from vertex 0, counterclockwise
};

std::vector<BoundarySample> sample_boundary(std::span<const Vec2> poly, int per_edge) {
  const std::size_t n = poly.size();
  std::vector<BoundarySample> out;
  out.reserve(n * per_edge);
  double arc = 0.0;
  for (std::size_t e = 0; e < n; ++e) {
    const Vec2 a = poly[e];
    const Vec2 b = poly[(e + 1) % n];
    const double len = distance(a, b);
    for (int t = 0; t < per_edge; ++t) {
      const double f = static_cast<double>(t) / per_edge;
      out.push_back({t == 0 ? a : a + (b - a) * f, arc + len * f});
    }
    arc += len;
  }
  return out;
}

// Arc-length position of a boundary point and the edge it lies on.
struct ArcPosition {
  std::size_t edge;
  double arc;
};

ArcPosition locate_on_boundary(std::span<const Vec2> poly, Vec2 p) {
  const std::size_t n = poly.size();
  double best = std::numeric_limits<double>::infinity();
  ArcPosition pos{0, 0.0};
  double arc = 0.0;
  for (std::size_t e = 0; e < n; ++e) {
    const Vec2 a = poly[e];
    const Vec2 b = poly[(e + 1) % n];
    Vec2 q;
    const double d = point_segment_distance(p, a, b, &q);
    if (d < best) {
      best = d;
      pos = {e, arc + distance(a, q)};
    }
    arc += distance(a, b);
  }
  return pos;
}

double wrap(double v, double period) {
  v = std::fmod(v, period);
  return v < 0.0 ? v + period : v;
}

}  // namespace

PathReport boundary_path_constant(std::span<const Vec2> polygon, int samples_per_edge) {
  if (samples_per_edge < 1) throw BoundsError("samples_per_edge must be >= 1");
  const Polygon poly = to_ccw(Polygon(polygon.begin(), polygon.end()));
  const std::vector<BoundarySample> s = sample_boundary(poly, samples_per_edge);
  const double total = perimeter(poly);
  const std::size_t n = s.size();

  auto ratio_of = [&](std::size_t i, std::size_t j, double* geo, double* chord) {
    const double c = distance(s[i].p, s[j].p);
    const double along = std::abs(s[j].arc - s[i].arc);
    const double g = std::min(along, total - along);
    if (geo) *geo = g;
    if (chord) *chord = c;
    return c > 0.0 ? g / c : 0.0;
  };

  double best = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, ratio_of(i, j, nullptr, nullptr));
  }
  PathReport rep;
  rep.k = best;
  rep.samples_per_edge = samples_per_edge;
  const double threshold = best * (1.0 - kTieTolerance);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double g = 0.0;
      double c = 0.0;
      if (ratio_of(i, j, &g, &c) >= threshold) {
        rep.x = s[i].p;
        rep.y = s[j].p;
        rep.geodesic = g;
        rep.chord = c;
        return rep;
      }
    }
  }
  return rep;
}

PathReport boundary_path_constant(const Component& component, int samples_per_edge) {
  return boundary_path_constant(component.polygon, samples_per_edge);
}

PathConvergence path_constant_convergence(std::span<const Vec2> polygon, int samples_per_edge) {
  PathConvergence c;
  c.coarse = boundary_path_constant(polygon, samples_per_edge);
  c.fine = boundary_path_constant(polygon, 2 * samples_per_edge);
  c.change = std::abs(c.fine.k - c.coarse.k);
  c.converged = c.change < 1e-3;
  return c;
}

std::vector<Vec2> boundary_geodesic(std::span<const Vec2> polygon, Vec2 from, Vec2 to) {
  const std::size_t n = polygon.size();
  const double total = perimeter(polygon);
  const ArcPosition p = locate_on_boundary(polygon, from);
  const ArcPosition q = locate_on_boundary(polygon, to);
  const double forward = wrap(q.arc - p.arc, total);
  const double backward = total - forward;

  std::vector<double> vertex_arc(n);
  for (std::size_t i = 1; i < n; ++i) {
    vertex_arc[i] = vertex_arc[i - 1] + distance(polygon[i - 1], polygon[i]);
  }

  std::vector<Vec2> out{from};
  constexpr double kArcSlack = 1e-12;
  if (forward <= backward) {
    for (std::size_t t = 1; t <= n; ++t) {
      const std::size_t idx = (p.edge + t) % n;
      double off = wrap(vertex_arc[idx] - p.arc, total);
      if (off > total - kArcSlack) off = 0.0;
      if (off >= forward - kArcSlack) break;
      if (off > kArcSlack) out.push_back(polygon[idx]);
    }
  } else {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t idx = (p.edge + n - t) % n;
      double off = wrap(p.arc - vertex_arc[idx], total);
      if (off > total - kArcSlack) off = 0.0;
      if (off >= backward - kArcSlack) break;
      if (off > kArcSlack) out.push_back(polygon[idx]);
    }
  }
  out.push_back(to);
  return out;
}

namespace {

double polyline_length(const Polyline& pl) {
  double len = 0.0;
  for (std::size_t s = 0; s < pl.segment_count(); ++s) len += distance(pl.segment_start(s), pl.segment_end(s));
  return len;
}

double distance_to_boundary(const Scene& scene, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Polyline& pl : scene.boundary) {
    for (std::size_t s = 0; s < pl.segment_count(); ++s) {
      best = std::min(best, point_segment_distance(p, pl.segment_start(s), pl.segment_end(s)));
    }
  }
  return best;
}

// Parameters in (0, 1) where segment ab meets the boundary of `poly`.
void crossing_parameters(Vec2 a, Vec2 b, std::span<const Vec2> poly, std::vector<double>& ts) {
  const Vec2 d = b - a;
  const double len2 = dot(d, d);
  const std::size_t n = poly.size();
  for (std::size_t e = 0; e < n; ++e) {
    const Vec2 c = poly[e];
    const Vec2 f = poly[(e + 1) % n];
    if (!segments_intersect(a, b, c, f)) continue;
    const Vec2 s = f - c;
    const double denom = cross(d, s);
    if (denom != 0.0) {
      ts.push_back(std::clamp(cross(c - a, s) / denom, 0.0, 1.0));
    } else {
      // Collinear overlap: both ends of the shared stretch.
      for (Vec2 v : {c, f}) ts.push_back(std::clamp(dot(v - a, d) / len2, 0.0, 1.0));
    }
  }
}

void append_point(std::vector<Vec2>& out, Vec2 p) {
  if (out.empty() || !(out.back() == p)) out.push_back(p);
}

}  // namespace

PushedPath push_path_to_boundary(const Scene& scene, const Polyline& path, int samples_per_edge) {
  if (path.points.size() < 2) throw DomainError("push_path_to_boundary: path needs 2 points");
  if (path.closed) throw DomainError("push_path_to_boundary: path must be open");
  for (Vec2 end : {path.points.front(), path.points.back()}) {
    if (distance_to_boundary(scene, end) > kOnE && !in_solid(scene, end, kOnE)) {
      throw DomainError("push_path_to_boundary: endpoint is not on E");
    }
  }
  const bool has_seed = !scene.seed.empty();
  auto in_seed = [&](Vec2 p) {
    return !has_seed || locate_point(p, scene.seed, kOnE) != Containment::kOutside;
  };
  for (Vec2 p : path.points) {
    if (!in_seed(p)) throw DomainError("push_path_to_boundary: path exits the seed closure");
  }

  PushedPath out;
  out.input_length = polyline_length(path);
  std::vector<Vec2> pts;
  std::map<int, bool> crossed;

  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const Vec2 a = path.segment_start(s);
    const Vec2 b = path.segment_end(s);
    const Box seg_box = bounding_box(std::vector<Vec2>{a, b});
    std::vector<std::size_t> nearby;
    std::vector<double> ts{0.0, 1.0};
    for (std::size_t k = 0; k < scene.components.size(); ++k) {
      if (scene.components[k].bounds.distance_to(seg_box) > kOnE) continue;
      nearby.push_back(k);
      crossing_parameters(a, b, scene.components[k].polygon, ts);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    append_point(pts, a);
    // Walk the pieces; consecutive pieces inside the same component merge.
    std::size_t piece = 0;
    while (piece + 1 < ts.size()) {
      const double t0 = ts[piece];
      const Vec2 mid = a + (b - a) * (0.5 * (t0 + ts[piece + 1]));
      int inside = -1;
      for (std::size_t k : nearby) {
        if (locate_point(mid, scene.components[k].polygon, kOnE) == Containment::kInside) {
          inside = static_cast<int>(k);
          break;
        }
      }
      std::size_t last = piece + 1;
      if (inside >= 0) {
        const auto& poly = scene.components[inside].polygon;
        while (last + 1 < ts.size()) {
          const Vec2 m2 = a + (b - a) * (0.5 * (ts[last] + ts[last + 1]));
          if (locate_point(m2, poly, kOnE) != Containment::kInside) break;
          ++last;
        }
        const Vec2 entry = a + (b - a) * t0;
        const Vec2 exit = ts[last] == 1.0 ? b : a + (b - a) * ts[last];
        for (Vec2 p : boundary_geodesic(poly, entry, exit)) append_point(pts, p);
        crossed[scene.components[inside].id] = true;
      } else {
        // Outside every component and inside the seed means inside E.
        if (!in_seed(mid)) throw DomainError("push_path_to_boundary: path exits the seed closure");
        append_point(pts, ts[last] == 1.0 ? b : a + (b - a) * ts[last]);
      }
      piece = last;
    }
    append_point(pts, b);
  }

  out.path.points = std::move(pts);
  out.output_length = polyline_length(out.path);
  for (const auto& [id, _] : crossed) {
    out.crossed.push_back(id);
    const auto& comp = *std::find_if(scene.components.begin(), scene.components.end(),
                                     [id = id](const Component& c) { return c.id == id; });
    out.k_max = std::max(out.k_max, boundary_path_constant(comp.polygon, samples_per_edge).k);
  }
  return out;
}

}  // namespace compss

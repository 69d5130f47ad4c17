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

#include "compss/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "compss/error.hpp"

namespace compss {

Vec2 Similarity::apply(Vec2 p) const {
  if (reflect) p.y = -p.y;
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  const Vec2 r{c * p.x - s * p.y, s * p.x + c * p.y};
  return r * scale + translation;
}

SimilarityMap::SimilarityMap(double scale, double rotation, bool reflect, Vec2 translation)
    : sim_{scale, rotation, reflect, translation} {
  if (!(scale > 0.0 && scale < 1.0)) {
    throw ConfigError("similarity scale must lie in (0, 1), got " + std::to_string(scale));
  }
}

Vec2 apply_similarity(const SimilarityMap& map, Vec2 p) { return map(p); }

namespace {

bool properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
         ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

// A point strictly inside a simple polygon: the midpoint of the first
// interior span of a horizontal scanline through the vertical middle.
Vec2 interior_point(const Polygon& poly) {
  const Vec2 c = centroid(poly);
  if (locate_point(c, poly) == Containment::kInside) return c;
  const Box b = bounding_box(poly);
  for (double frac : {0.5, 0.37, 0.61, 0.23, 0.77}) {
    const double y = b.min.y + frac * b.height();
    std::vector<double> xs;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const Vec2 p = poly[j];
      const Vec2 q = poly[i];
      if ((q.y > y) != (p.y > y)) xs.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
    }
    std::sort(xs.begin(), xs.end());
    if (xs.size() >= 2) {
      const Vec2 m{0.5 * (xs[0] + xs[1]), y};
      if (locate_point(m, poly) == Containment::kInside) return m;
    }
  }
  return c;
}

void require_polygon(const Polygon& poly, const std::string& what) {
  if (poly.size() < 3) throw ConfigError(what + " needs at least 3 vertices");
  if (std::abs(signed_area(poly)) < 1e-12) throw ConfigError(what + " is degenerate (area < 1e-12)");
  if (!is_simple(poly)) throw ConfigError(what + " is not a simple polygon");
}

}  // namespace

IfsSystem validate_system(IfsSystem system) {
  if (system.maps.size() < 2) throw ConfigError("an IFS needs at least 2 maps");
  require_polygon(system.seed, "seed");
  system.seed = to_ccw(std::move(system.seed));
  const Polygon& seed = system.seed;

  for (std::size_t i = 0; i < system.maps.size(); ++i) {
    for (Vec2 p : seed) {
      if (locate_point(system.maps[i](p), seed) == Containment::kOutside) {
        throw ConfigError("map " + std::to_string(i) + " does not send the seed into itself");
      }
    }
  }

  if (system.carve.empty()) throw ConfigError("carve rule needs at least 1 polygon");
  for (std::size_t j = 0; j < system.carve.size(); ++j) {
    const std::string name = "carve[" + std::to_string(j) + "]";
    require_polygon(system.carve[j], name);
    system.carve[j] = to_ccw(std::move(system.carve[j]));
    const Polygon& c = system.carve[j];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Vec2 mid = (c[k] + c[(k + 1) % c.size()]) * 0.5;
      if (locate_point(c[k], seed) == Containment::kOutside ||
          locate_point(mid, seed) == Containment::kOutside) {
        throw ConfigError(name + " is not inside the seed");
      }
    }
  }

  for (std::size_t a = 0; a < system.carve.size(); ++a) {
    for (std::size_t b = a + 1; b < system.carve.size(); ++b) {
      const Polygon& p = system.carve[a];
      const Polygon& q = system.carve[b];
      bool overlap = locate_point(interior_point(p), q) == Containment::kInside ||
                     locate_point(interior_point(q), p) == Containment::kInside;
      for (std::size_t i = 0; i < p.size() && !overlap; ++i) {
        if (locate_point(p[i], q) == Containment::kInside) overlap = true;
        for (std::size_t k = 0; k < q.size() && !overlap; ++k) {
          overlap = properly_cross(p[i], p[(i + 1) % p.size()], q[k], q[(k + 1) % q.size()]);
        }
      }
      for (std::size_t k = 0; k < q.size() && !overlap; ++k) {
        if (locate_point(q[k], p) == Containment::kInside) overlap = true;
      }
      if (overlap) {
        throw ConfigError("carve[" + std::to_string(a) + "] and carve[" + std::to_string(b) +
                          "] overlap; carve polygons must be pairwise disjoint");
      }
    }
  }
  return system;
}

IfsSystem build_preset(Preset preset) {
  IfsSystem sys;
  switch (preset) {
    case Preset::kSierpinskiCarpet: {
      const double third = 1.0 / 3.0;
      for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
          if (i == 1 && j == 1) continue;
          sys.maps.emplace_back(third, 0.0, false, Vec2{i / 3.0, j / 3.0});
        }
      }
      sys.seed = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
      sys.carve = {{{third, third}, {2 * third, third}, {2 * third, 2 * third}, {third, 2 * third}}};
      break;
    }
    case Preset::kSierpinskiGasket: {
      const double h = std::sqrt(3.0) / 2.0;
      sys.maps.emplace_back(0.5, 0.0, false, Vec2{0.0, 0.0});
      sys.maps.emplace_back(0.5, 0.0, false, Vec2{0.5, 0.0});
      sys.maps.emplace_back(0.5, 0.0, false, Vec2{0.25, h / 2.0});
      sys.seed = {{0, 0}, {1, 0}, {0.5, h}};
      sys.carve = {{{0.5, 0.0}, {0.75, h / 2.0}, {0.25, h / 2.0}}};
      break;
    }
  }
  return sys;
}

IfsSystem build_preset(std::string_view name) {
  if (name == "sierpinski-carpet") return build_preset(Preset::kSierpinskiCarpet);
  if (name == "sierpinski-gasket") return build_preset(Preset::kSierpinskiGasket);
  throw ConfigError("unknown preset \"" + std::string(name) +
                    "\"; valid presets: sierpinski-carpet, sierpinski-gasket");
}

std::uint64_t component_count(const IfsSystem& system, int depth) {
  const std::uint64_t m = system.maps.size();
  const std::uint64_t c = system.carve.size();
  std::uint64_t total = 0;
  std::uint64_t per_gen = c;
  for (int g = 1; g <= depth; ++g) {
    total += per_gen;
    // Saturate instead of overflowing; callers only compare against a cap.
    if (total > (1ULL << 62)) return total;
    per_gen *= m;
  }
  return total;
}

namespace {

Component make_component(Polygon poly, int generation, int id) {
  Component c;
  c.polygon = to_ccw(std::move(poly));
  c.generation = generation;
  c.id = id;
  c.bounds = bounding_box(c.polygon);
  return c;
}

void finish_scene(Scene& scene) {
  scene.boundary.clear();
  scene.boundary.reserve(scene.components.size() + 1);
  scene.bounds = Box{};
  if (!scene.seed.empty()) {
    scene.boundary.push_back({scene.seed, true});
    scene.bounds.expand(bounding_box(scene.seed));
  }
  for (const Component& c : scene.components) {
    scene.boundary.push_back({c.polygon, true});
    scene.bounds.expand(c.bounds);
  }
}

}  // namespace

Scene generate_scene(const IfsSystem& system, int depth, const GenerateOptions& options) {
  if (depth < 1 || depth > options.max_depth) {
    throw BoundsError("depth must be in [1, " + std::to_string(options.max_depth) + "], got " +
                      std::to_string(depth));
  }
  const std::uint64_t count = component_count(system, depth);
  if (count > options.max_components) {
    throw ResourceError("scene at depth " + std::to_string(depth) + " would have " +
                        std::to_string(count) + " components; cap is " +
                        std::to_string(options.max_components));
  }

  Scene scene;
  scene.depth = depth;
  scene.seed = to_ccw(system.seed);
  scene.components.reserve(count);

  // Generation g holds the images under words of length g-1. Prepending a
  // letter to every word of the previous generation, letter-major, yields
  // lexicographic order again.
  std::vector<Polygon> current;
  for (const Polygon& c : system.carve) current.push_back(to_ccw(c));
  for (int g = 1; g <= depth; ++g) {
    for (Polygon& p : current) {
      scene.components.push_back(
          make_component(std::move(p), g, static_cast<int>(scene.components.size())));
    }
    if (g == depth) break;
    const std::size_t prev_begin = scene.components.size() - current.size();
    const std::size_t prev_end = scene.components.size();
    std::vector<Polygon> next;
    next.reserve(current.size() * system.maps.size());
    for (const SimilarityMap& f : system.maps) {
      for (std::size_t k = prev_begin; k < prev_end; ++k) {
        const Polygon& src = scene.components[k].polygon;
        Polygon img(src.size());
        std::transform(src.begin(), src.end(), img.begin(), [&](Vec2 p) { return f(p); });
        next.push_back(std::move(img));
      }
    }
    current = std::move(next);
  }
  finish_scene(scene);
  return scene;
}

Scene transform_scene(const Scene& scene, const Similarity& sim) {
  auto map_poly = [&](const Polygon& p) {
    Polygon out(p.size());
    std::transform(p.begin(), p.end(), out.begin(), [&](Vec2 v) { return sim(v); });
    return to_ccw(std::move(out));
  };
  Scene out;
  out.depth = scene.depth;
  out.seed = map_poly(scene.seed);
  out.components.reserve(scene.components.size());
  for (const Component& c : scene.components) {
    out.components.push_back(make_component(map_poly(c.polygon), c.generation, c.id));
  }
  finish_scene(out);
  return out;
}

Scene scene_from_polygons(std::vector<Polygon> polygons, Polygon seed) {
  Scene scene;
  scene.depth = 1;
  for (Polygon& p : polygons) {
    scene.components.push_back(
        make_component(std::move(p), 1, static_cast<int>(scene.components.size())));
  }
  if (seed.empty() && !scene.components.empty()) {
    Box b;
    for (const Component& c : scene.components) b.expand(c.bounds);
    seed = {b.min, {b.max.x, b.min.y}, b.max, {b.min.x, b.max.y}};
  }
  scene.seed = seed.empty() ? seed : to_ccw(std::move(seed));
  finish_scene(scene);
  return scene;
}

bool in_solid(const Scene& scene, Vec2 p, double tol) {
  if (scene.seed.empty() || locate_point(p, scene.seed, tol) != Containment::kInside) return false;
  for (const Component& c : scene.components) {
    if (c.bounds.distance_to(Box{p, p}) > tol) continue;
    if (locate_point(p, c.polygon, tol) != Containment::kOutside) return false;
  }
  return true;
}

}  // namespace compss

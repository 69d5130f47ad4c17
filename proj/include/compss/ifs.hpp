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

// Iterated function systems of plane similarities and the finite-depth
// scenes they generate: the bounded complementary components of U and the
// polyline approximation of E = dU.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "compss/geometry.hpp"

namespace compss {

/// A general plane similarity: reflect across the x-axis (optional), rotate,
/// scale, translate, in that order.
struct Similarity {
  double scale = 1.0;
  double rotation = 0.0;
  bool reflect = false;
  Vec2 translation;

  Vec2 apply(Vec2 p) const;
  Vec2 operator()(Vec2 p) const { return apply(p); }
  bool operator==(const Similarity&) const = default;
};

/// A contracting similarity; scale is validated to lie in (0, 1).
class SimilarityMap {
 public:
  /// Throws ConfigError unless 0 < scale < 1.
  SimilarityMap(double scale, double rotation, bool reflect, Vec2 translation);

  double scale() const { return sim_.scale; }
  double rotation() const { return sim_.rotation; }
  bool reflect() const { return sim_.reflect; }
  Vec2 translation() const { return sim_.translation; }
  const Similarity& similarity() const { return sim_; }

  Vec2 operator()(Vec2 p) const { return sim_.apply(p); }

 private:
  Similarity sim_;
};

Vec2 apply_similarity(const SimilarityMap& map, Vec2 p);

struct IfsSystem {
  std::vector<SimilarityMap> maps;
  Polygon seed;                ///< generation-0 closed region
  std::vector<Polygon> carve;  ///< open pieces removed per application
};

/// Checks the structural invariants of a system and returns it with every
/// polygon oriented counterclockwise. Throws ConfigError naming the
/// violated invariant.
IfsSystem validate_system(IfsSystem system);

enum class Preset { kSierpinskiCarpet, kSierpinskiGasket };

/// "sierpinski-carpet" or "sierpinski-gasket"; anything else throws
/// ConfigError listing the valid names.
IfsSystem build_preset(std::string_view name);
IfsSystem build_preset(Preset preset);

struct Component {
  Polygon polygon;  ///< simple, counterclockwise
  int generation = 0;
  int id = 0;
  Box bounds;
};

/// Finite-depth approximation. E is the seed with the open components
/// removed; `boundary` holds its boundary curves.
struct Scene {
  std::vector<Component> components;
  std::vector<Polyline> boundary;  ///< seed boundary first, then components
  Polygon seed;
  int depth = 0;
  Box bounds;
};

struct GenerateOptions {
  int max_depth = 8;
  std::uint64_t max_components = 1'000'000;
};

/// Number of components a system yields at `depth`: sum over g of c*m^(g-1).
std::uint64_t component_count(const IfsSystem& system, int depth);

/// Enumerates carve images under all map-words of length 0..depth-1.
/// Components are ordered by generation, then lexicographically by the word
/// (w1, ..., wk) of the image f_w1(...f_wk(carve)), then by carve index; ids
/// follow that order.
Scene generate_scene(const IfsSystem& system, int depth, const GenerateOptions& options = {});

/// Applies a global similarity to every coordinate of the scene.
Scene transform_scene(const Scene& scene, const Similarity& sim);

/// Builds a scene directly from component polygons (seed taken as the
/// bounding box when not given). Used for hand-made test configurations.
Scene scene_from_polygons(std::vector<Polygon> polygons, Polygon seed = {});

/// True when p is strictly inside the seed and in no component's closure,
/// i.e. in the interior of E away from its boundary curves.
bool in_solid(const Scene& scene, Vec2 p, double tol = kEps);

}  // namespace compss

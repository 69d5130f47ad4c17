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

// Radial projections x -> (x - w)/|x - w| from E to the unit circle and the
// homotopy classification of their classes by complement components.

#pragma once

#include <optional>
#include <span>

#include "compss/geometry.hpp"
#include "compss/ifs.hpp"
#include "compss/raster.hpp"

namespace compss {

/// The unit vector (x - w)/|x - w|. Throws DomainError when x == w.
Vec2 radial_map(Vec2 w, Vec2 x);

/// Degree of the radial map restricted to a closed loop: summed signed
/// angle increments over 2*pi. Throws DomainError when w is within 1e-12 of
/// the loop and NumericalError when the sum is not within 1e-6 of an integer.
int winding_number(std::span<const Vec2> loop, Vec2 w);

/// True iff w and z lie in the same complement component of E.
bool homotopy_equivalent(const LabeledGrid& labeled, Vec2 w, Vec2 z);

struct RadialMapQuery {
  Vec2 w;
  double dist_to_e = 0.0;
  double lipschitz_bound = 0.0;  ///< 1 / dist_to_e
  Vec2 nearest;                  ///< a nearest point of E
  /// Distance read from the raster field at w's cell, when a field is given.
  std::optional<double> raster_distance;
};

/// Exact distance from w to the boundary polylines. Throws DomainError when
/// w lies on E (within 1e-12).
RadialMapQuery radial_query(const Scene& scene, Vec2 w, const DistanceField* field = nullptr);

}  // namespace compss

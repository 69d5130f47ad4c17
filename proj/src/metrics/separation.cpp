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

constexpr double kTieTolerance = 1e-12;

}  // namespace

SeparationReport separation_constant(const Scene& scene) {
  const auto& comps = scene.components;
  const std::size_t n = comps.size();
  if (n < 2) throw DomainError("separation_constant: needs at least 2 components");

  std::vector<double> diam(n);
  for (std::size_t i = 0; i < n; ++i) diam[i] = polygon_diameter(comps[i].polygon).length;

  SeparationReport rep;
  rep.min_gap = std::numeric_limits<double>::infinity();
  double best = 0.0;

  // Pass 1: the extremal ratio, touching pairs and the smallest gap. A pair
  // is skipped only when its box gap already rules out all three.
  for (std::size_t i = 0; i < n && !rep.unbounded; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double md = std::min(diam[i], diam[j]);
      const double bd = comps[i].bounds.distance_to(comps[j].bounds);
      if (bd > kTouchTolerance && md / bd < best * (1.0 - kTieTolerance) && bd >= rep.min_gap) {
        continue;
      }
      const ClosestPair cp = polygon_distance(comps[i].polygon, comps[j].polygon);
      if (cp.distance < rep.min_gap) {
        rep.min_gap = cp.distance;
        rep.min_gap_pair = {comps[i].id, comps[j].id};
      }
      if (cp.distance <= kTouchTolerance) {
        // Lexicographic scan: the first touching pair is the smallest.
        rep.unbounded = true;
        rep.constant = std::numeric_limits<double>::infinity();
        rep.witness = {comps[i].id, comps[j].id};
        rep.witness_points = cp;
        rep.witness_distance = cp.distance;
        rep.min_gap = cp.distance;
        rep.min_gap_pair = rep.witness;
        break;
      }
      best = std::max(best, md / cp.distance);
    }
  }
  if (rep.unbounded) return rep;

  // Pass 2: smallest id pair attaining the maximum up to the tie tolerance.
  const double threshold = best * (1.0 - kTieTolerance);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double md = std::min(diam[i], diam[j]);
      const double bd = comps[i].bounds.distance_to(comps[j].bounds);
      if (md / bd < threshold) continue;
      const ClosestPair cp = polygon_distance(comps[i].polygon, comps[j].polygon);
      if (md / cp.distance >= threshold) {
        rep.constant = best;
        rep.witness = {comps[i].id, comps[j].id};
        rep.witness_points = cp;
        rep.witness_distance = cp.distance;
        return rep;
      }
    }
  }
  throw NumericalError("separation_constant: extremal pair not found on rescan");
}

}  // namespace compss

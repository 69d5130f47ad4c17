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

#include "compss/metrics.hpp"

namespace compss {

MeasureSummary measure_summary(const Scene& scene, const Grid* grid) {
  MeasureSummary m;
  m.seed_area = std::abs(signed_area(scene.seed));
  for (const Component& c : scene.components) {
    m.component_area += std::abs(signed_area(c.polygon));
    m.perimeter_sum += perimeter(c.polygon);
  }
  m.area_estimate = m.seed_area - m.component_area;
  if (grid != nullptr) {
    const double h = grid->geom.h();
    m.occupied_area = static_cast<double>(grid->occupied_count()) * h * h;
  }
  return m;
}

}  // namespace compss

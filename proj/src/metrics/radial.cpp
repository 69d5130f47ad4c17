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
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "compss/error.hpp"
#include "compss/metrics.hpp"

namespace compss {

namespace {

constexpr double kTieTolerance = 1e-12;
// Closed balls: points this close (relative) to the sphere count as inside.
constexpr double kBallSlack = 1e-12;

std::int64_t bucket_key(std::int64_t a, std::int64_t b) { return (a << 32) ^ (b & 0xffffffff); }

// Max-pyramid over the squared distance field; answers "largest value over
// cells whose centre lies in a disc" by branch and bound.
class BallMax {
 public:
  explicit BallMax(const DistanceField& field) : geom_(field.geom) {
    levels_.push_back({geom_.width, geom_.height, field.squared});
    while (levels_.back().w > 1 || levels_.back().h > 1) {
      const Level& prev = levels_.back();
      Level next{(prev.w + 1) / 2, (prev.h + 1) / 2, {}};
      next.v.assign(static_cast<std::size_t>(next.w) * next.h, 0);
      for (int j = 0; j < prev.h; ++j) {
        for (int i = 0; i < prev.w; ++i) {
          auto& dst = next.v[static_cast<std::size_t>(j / 2) * next.w + i / 2];
          dst = std::max(dst, prev.v[static_cast<std::size_t>(j) * prev.w + i]);
        }
      }
      levels_.push_back(std::move(next));
    }
  }

  /// Centre and radius in cell units.
  std::uint32_t query(double cu, double cv, double radius) const {
    const double r2 = radius * radius * (1.0 + kBallSlack);
    std::uint32_t best = 0;
    visit(static_cast<int>(levels_.size()) - 1, 0, 0, cu, cv, r2, best);
    return best;
  }

 private:
  struct Level {
    int w;
    int h;
    std::vector<std::uint32_t> v;
  };

  void visit(int level, int bi, int bj, double cu, double cv, double r2,
             std::uint32_t& best) const {
    const Level& L = levels_[level];
    const std::uint32_t block_max = L.v[static_cast<std::size_t>(bj) * L.w + bi];
    if (block_max <= best) return;
    const int span = 1 << level;
    const int ilo = bi * span;
    const int jlo = bj * span;
    const int ihi = std::min(ilo + span, geom_.width) - 1;
    const int jhi = std::min(jlo + span, geom_.height) - 1;
    const double nx = std::max({0.0, ilo - cu, cu - ihi});
    const double ny = std::max({0.0, jlo - cv, cv - jhi});
    if (nx * nx + ny * ny > r2) return;
    const double fx = std::max(std::abs(ilo - cu), std::abs(ihi - cu));
    const double fy = std::max(std::abs(jlo - cv), std::abs(jhi - cv));
    if (fx * fx + fy * fy <= r2) {
      best = block_max;
      return;
    }
    const Level& child = levels_[level - 1];
    for (int dj = 0; dj < 2; ++dj) {
      for (int di = 0; di < 2; ++di) {
        const int ci = 2 * bi + di;
        const int cj = 2 * bj + dj;
        if (ci < child.w && cj < child.h) visit(level - 1, ci, cj, cu, cv, r2, best);
      }
    }
  }

  GridGeometry geom_;
  std::vector<Level> levels_;
};

void require_scales(std::span<const double> scales, const char* op) {
  if (scales.empty()) throw DomainError(std::string(op) + ": empty scale list");
  for (double r : scales) {
    if (!(r > 0.0)) throw BoundsError(std::string(op) + ": scales must be positive");
  }
}

// Folds one (x, r, ratio) observation into the running infimum. Iteration
// order is fixed, so the first observation within the tie tolerance wins.
void record(RadialConstant& out, RadialWitness& per_scale, const RadialWitness& w) {
  if (w.ratio < per_scale.ratio * (1.0 - kTieTolerance)) per_scale = w;
  if (w.ratio < out.worst.ratio * (1.0 - kTieTolerance)) out.worst = w;
}

RadialConstant start(std::span<const double> scales, std::size_t samples) {
  RadialConstant out;
  out.scales_tested.assign(scales.begin(), scales.end());
  out.sample_count = samples;
  out.worst.ratio = std::numeric_limits<double>::infinity();
  return out;
}

void finish(RadialConstant& out) {
  out.value = out.sample_count == 0 ? 0.0 : out.worst.ratio;
  if (out.sample_count == 0) out.worst.ratio = 0.0;
}

}  // namespace

std::vector<Vec2> boundary_samples(const Scene& scene, double dedup_radius) {
  std::vector<Vec2> kept;
  const double cell = dedup_radius > 0.0 ? dedup_radius : 1.0;
  std::unordered_map<std::int64_t, std::vector<Vec2>> buckets;
  auto offer = [&](Vec2 p) {
    if (dedup_radius > 0.0) {
      const auto bx = static_cast<std::int64_t>(std::floor(p.x / cell));
      const auto by = static_cast<std::int64_t>(std::floor(p.y / cell));
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          auto it = buckets.find(bucket_key(bx + dx, by + dy));
          if (it == buckets.end()) continue;
          for (Vec2 q : it->second) {
            if (distance(p, q) <= dedup_radius) return;
          }
        }
      }
      buckets[bucket_key(bx, by)].push_back(p);
    } else if (!kept.empty() && kept.back() == p) {
      return;
    }
    kept.push_back(p);
  };
  for (const Polyline& pl : scene.boundary) {
    if (pl.points.size() == 1) offer(pl.points[0]);
    for (std::size_t s = 0; s < pl.segment_count(); ++s) {
      offer(pl.segment_start(s));
      offer((pl.segment_start(s) + pl.segment_end(s)) * 0.5);
    }
    if (!pl.closed && pl.points.size() >= 2) offer(pl.points.back());
  }
  return kept;
}

std::vector<double> default_scales(const IfsSystem& system, const Scene& scene, double min_scale) {
  const Box seed_box = bounding_box(system.seed);
  const double length = std::max(seed_box.width(), seed_box.height());
  double rho = system.maps.empty() ? 0.5 : system.maps.front().scale();
  for (const SimilarityMap& m : system.maps) {
    if (std::abs(m.scale() - rho) > 1e-12) rho = 0.5;
  }
  const double upper = scene.bounds.diameter();
  std::vector<double> scales;
  for (int k = 1; k <= kDefaultScaleCount; ++k) {
    const double r = length * std::pow(rho, k);
    if (r >= min_scale && r <= upper) scales.push_back(r);
  }
  return scales;
}

RasterOptions porosity_raster_options(std::span<const double> scales, double resolution) {
  RasterOptions options;
  double reach = 0.0;
  for (double r : scales) reach = std::max(reach, r);
  options.padding += static_cast<int>(std::ceil(reach * resolution));
  return options;
}

RadialConstant porosity_constant(const Scene& scene, const DistanceField& field,
                                 std::span<const double> scales) {
  require_scales(scales, "porosity_constant");
  const GridGeometry& g = field.geom;
  const double h = g.h();
  const double upper = scene.bounds.diameter();
  for (double r : scales) {
    if (r < 8.0 * h * (1.0 - 1e-12) || r > upper * (1.0 + 1e-12)) {
      throw BoundsError("porosity_constant: scale " + std::to_string(r) + " outside [8h, diam] = [" +
                        std::to_string(8.0 * h) + ", " + std::to_string(upper) + "]");
    }
  }
  const double reach = *std::max_element(scales.begin(), scales.end()) * g.resolution;
  if (g.i0 > std::floor(scene.bounds.min.x * g.resolution - reach) ||
      g.j0 > std::floor(scene.bounds.min.y * g.resolution - reach) ||
      g.i0 + g.width - 1 < std::ceil(scene.bounds.max.x * g.resolution + reach) ||
      g.j0 + g.height - 1 < std::ceil(scene.bounds.max.y * g.resolution + reach)) {
    throw BoundsError("porosity_constant: distance field does not cover every ball; "
                      "rasterize with porosity_raster_options");
  }
  const std::vector<Vec2> samples = boundary_samples(scene, 0.5 * h);
  RadialConstant out = start(scales, samples.size());
  const BallMax ballmax(field);
  for (double r : scales) {
    RadialWitness per_scale{{}, r, std::numeric_limits<double>::infinity()};
    for (Vec2 x : samples) {
      const double cu = x.x * g.resolution - g.i0;
      const double cv = x.y * g.resolution - g.j0;
      const std::uint32_t sq = ballmax.query(cu, cv, r * g.resolution);
      const double ratio = std::sqrt(static_cast<double>(sq)) * h / r;
      record(out, per_scale, {x, r, ratio});
    }
    if (!samples.empty()) out.witnesses.push_back(per_scale);
  }
  finish(out);
  return out;
}

RadialConstant component_in_ball_constant(const Scene& scene, std::span<const double> scales,
                                          double dedup_radius) {
  require_scales(scales, "component_in_ball_constant");
  const auto& comps = scene.components;
  const std::vector<Vec2> samples = boundary_samples(scene, dedup_radius);
  RadialConstant out = start(scales, samples.size());

  // Components by decreasing diameter (ties by position), so a linear scan
  // can stop at the first contained one.
  std::vector<double> diam(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) diam[i] = polygon_diameter(comps[i].polygon).length;
  std::vector<std::size_t> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diam[a] > diam[b]; });

  // Uniform buckets on bounding-box centres for small balls.
  const Box& bounds = scene.bounds;
  const double bucket = std::max(bounds.diameter() / 64.0, 1e-300);
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  for (std::size_t k : order) {
    const Vec2 c = comps[k].bounds.center();
    buckets[bucket_key(static_cast<std::int64_t>(std::floor((c.x - bounds.min.x) / bucket)),
                       static_cast<std::int64_t>(std::floor((c.y - bounds.min.y) / bucket)))]
        .push_back(k);
  }

  auto contained = [&](std::size_t k, Vec2 x, double r) {
    const Component& c = comps[k];
    const double lim = r * (1.0 + kBallSlack);
    if (c.bounds.distance_to(Box{x, x}) > lim) return false;
    for (Vec2 p : c.polygon) {
      if (distance(p, x) > lim) return false;
    }
    return true;
  };

  std::size_t hits = 0;
  std::size_t queries = 0;
  for (double r : scales) {
    RadialWitness per_scale{{}, r, std::numeric_limits<double>::infinity()};
    const std::int64_t reach = static_cast<std::int64_t>(std::ceil(r / bucket)) + 1;
    const bool use_buckets = (2 * reach + 1) * (2 * reach + 1) < static_cast<std::int64_t>(comps.size());
    // Components too large to fit any ball of radius r are never candidates.
    const auto first_fit = std::find_if(order.begin(), order.end(),
                                        [&](std::size_t k) { return diam[k] <= 2.0 * r * (1.0 + kBallSlack); });
    for (Vec2 x : samples) {
      double best = 0.0;
      if (use_buckets) {
        const auto bx = static_cast<std::int64_t>(std::floor((x.x - bounds.min.x) / bucket));
        const auto by = static_cast<std::int64_t>(std::floor((x.y - bounds.min.y) / bucket));
        for (std::int64_t dy = -reach; dy <= reach; ++dy) {
          for (std::int64_t dx = -reach; dx <= reach; ++dx) {
            auto it = buckets.find(bucket_key(bx + dx, by + dy));
            if (it == buckets.end()) continue;
            for (std::size_t k : it->second) {
              if (diam[k] > best && contained(k, x, r)) best = diam[k];
            }
          }
        }
      } else {
        for (auto it = first_fit; it != order.end(); ++it) {
          if (contained(*it, x, r)) {
            best = diam[*it];
            break;
          }
        }
      }
      ++queries;
      if (best > 0.0) ++hits;
      record(out, per_scale, {x, r, best / r});
    }
    if (!samples.empty()) out.witnesses.push_back(per_scale);
  }
  finish(out);
  out.qualitative_fraction = queries == 0 ? 0.0 : static_cast<double>(hits) / queries;
  return out;
}

}  // namespace compss

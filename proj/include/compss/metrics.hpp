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

// Scale-invariant constants of the complementary components of a scene:
// roundness, the separation constant, porosity, component-in-ball, boundary
// path constants, similarity classes and measure summaries.

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "compss/geometry.hpp"
#include "compss/ifs.hpp"
#include "compss/raster.hpp"

namespace compss {

// ---------------------------------------------------------------------------
// Shape metrics

struct ShapeMetrics {
  double diameter = 0.0;
  double inradius = 0.0;
  double roundness = 0.0;  ///< inradius / diameter
  Vec2 incenter;
  Diameter diameter_pair;
  bool convex = true;
  /// Absolute error bound on `inradius`: 0 for the exact convex solver,
  /// h*sqrt(2) for the raster estimate on non-convex polygons.
  double inradius_error = 0.0;
};

struct ShapeOptions {
  /// Raster cells across the diameter for non-convex inradius estimates.
  int nonconvex_cells = 512;
};

/// Throws DomainError for degenerate polygons (|area| < 1e-12).
ShapeMetrics shape_metrics(std::span<const Vec2> polygon, const ShapeOptions& options = {});
ShapeMetrics shape_metrics(const Component& component, const ShapeOptions& options = {});

// ---------------------------------------------------------------------------
// Separation constant: min(diam V, diam W) <= C dist(V, W)

/// Distances at or below this count as touching closures.
inline constexpr double kTouchTolerance = 1e-12;

struct SeparationReport {
  bool unbounded = false;
  double constant = 0.0;             ///< meaningful when !unbounded
  std::pair<int, int> witness{-1, -1};
  ClosestPair witness_points;        ///< closest points of the witness pair
  double witness_distance = 0.0;
  double min_gap = 0.0;              ///< smallest dist(V, W) over all pairs
  std::pair<int, int> min_gap_pair{-1, -1};
};

/// Maximum over distinct pairs of min(diam)/dist with exact polygon
/// distances. Bounding-box pruning never changes the result. Ties (ratios
/// within 1e-12 relative) go to the smallest id pair. Throws DomainError for
/// fewer than two components.
SeparationReport separation_constant(const Scene& scene);

// ---------------------------------------------------------------------------
// Radial conditions on balls B(x, r) centred on E

struct RadialWitness {
  Vec2 x;
  double r = 0.0;
  double ratio = 0.0;
};

struct RadialConstant {
  double value = 0.0;                        ///< infimum over tested (x, r)
  RadialWitness worst;
  std::vector<RadialWitness> witnesses;      ///< worst sample per scale
  std::vector<double> scales_tested;
  std::size_t sample_count = 0;
  /// Component-in-ball only: fraction of (x, r) with some component inside.
  double qualitative_fraction = 0.0;
};

/// Boundary vertices and edge midpoints of every polyline, in order, with
/// later points dropped when within `dedup_radius` of a kept one.
std::vector<Vec2> boundary_samples(const Scene& scene, double dedup_radius);

inline constexpr int kDefaultScaleCount = 3;

/// Geometric scales L*rho^k, k = 1..kDefaultScaleCount, where L is the
/// larger side of the seed's bounding box and rho the common contraction
/// ratio of the maps (1/2 when they differ). Scales outside
/// [min_scale, diam(bounds)] are dropped. The set does not depend on depth,
/// so values at consecutive depths are comparable.
std::vector<double> default_scales(const IfsSystem& system, const Scene& scene, double min_scale);

/// Raster options whose padding lets the grid contain every ball of radius
/// max(scales) centred in the scene bounds.
RasterOptions porosity_raster_options(std::span<const double> scales, double resolution);

/// For each sampled x and each r: max over cells centred in the closed
/// ball of dist(cell, E)/r. The constant is the minimum of these maxima.
/// Scales must lie in [8h, diam(bounds)] and the field must cover every
/// ball (see porosity_raster_options); BoundsError otherwise.
RadialConstant porosity_constant(const Scene& scene, const DistanceField& field,
                                 std::span<const double> scales);

/// For each sampled x and each r: max diam(V)/r over components V inside
/// the closed ball (all vertices within r), 0 when none fits.
RadialConstant component_in_ball_constant(const Scene& scene, std::span<const double> scales,
                                          double dedup_radius = 0.0);

// ---------------------------------------------------------------------------
// Boundary path constant

struct PathReport {
  double k = 1.0;
  Vec2 x;
  Vec2 y;
  double geodesic = 0.0;
  double chord = 0.0;
  int samples_per_edge = 0;
};

/// Max over sampled boundary pairs of (boundary geodesic)/(chord). Samples
/// are the vertices plus equally spaced points, `samples_per_edge` per edge.
PathReport boundary_path_constant(std::span<const Vec2> polygon, int samples_per_edge);
PathReport boundary_path_constant(const Component& component, int samples_per_edge);

struct PathConvergence {
  PathReport coarse;
  PathReport fine;  ///< at twice the density
  double change = 0.0;
  bool converged = false;  ///< change < 1e-3
};

PathConvergence path_constant_convergence(std::span<const Vec2> polygon, int samples_per_edge);

/// Shorter boundary arc of a polygon between two of its boundary points;
/// ties go to the counterclockwise arc. Endpoints are included.
std::vector<Vec2> boundary_geodesic(std::span<const Vec2> polygon, Vec2 from, Vec2 to);

struct PushedPath {
  Polyline path;
  double input_length = 0.0;
  double output_length = 0.0;
  double k_max = 1.0;          ///< max path constant over crossed components
  std::vector<int> crossed;    ///< ids of components whose interior was crossed
};

/// Replaces every stretch of `path` through a component's interior by the
/// shorter boundary arc between its entry and exit points. Throws
/// DomainError when an endpoint is off E or the path leaves the seed.
PushedPath push_path_to_boundary(const Scene& scene, const Polyline& path,
                                 int samples_per_edge = 32);

// ---------------------------------------------------------------------------
// Similarity classes

/// Centroid at the origin, diameter 1, and the lexicographically least
/// vertex sequence over edge-to-x-axis rotations and the reflection.
Polygon canonical_form(std::span<const Vec2> polygon);

/// Least max-vertex distance between `canonical` and any aligned
/// normalisation of `other`; +inf when vertex counts differ.
double shape_distance(std::span<const Vec2> canonical, std::span<const Vec2> other);

struct SimilarityPartition {
  std::vector<std::vector<int>> classes;  ///< component ids, ascending
  std::vector<int> class_of;              ///< indexed by component position
  std::vector<Polygon> representatives;   ///< canonical form per class
};

SimilarityPartition similarity_classes(const Scene& scene, double tolerance = 1e-6);

// ---------------------------------------------------------------------------
// Measure summary

struct MeasureSummary {
  double seed_area = 0.0;
  double component_area = 0.0;
  double area_estimate = 0.0;   ///< seed area minus component areas
  double perimeter_sum = 0.0;   ///< sum of component perimeters
  std::optional<double> occupied_area;  ///< raster area of E, when a grid is given
};

MeasureSummary measure_summary(const Scene& scene, const Grid* grid = nullptr);

}  // namespace compss

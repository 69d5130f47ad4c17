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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "compss/geometry.hpp"
#include "compss/ifs.hpp"

namespace compss {

struct CellIndex {
  int i = 0;  ///< column
  int j = 0;  ///< row
  bool operator==(const CellIndex&) const = default;
};

/// Placement of a uniform grid. Cell (i, j) is the closed square of side h
/// centred at ((i0 + i) h, (j0 + j) h), so cell centres sit on the lattice
/// hZ^2.
struct GridGeometry {
  double resolution = 0.0;  ///< cells per unit length
  int i0 = 0;
  int j0 = 0;
  int width = 0;
  int height = 0;

  double h() const { return 1.0 / resolution; }
  std::size_t size() const { return static_cast<std::size_t>(width) * height; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * width + i; }
  Vec2 origin() const { return center(0, 0); }
  Vec2 center(int i, int j) const { return {(i0 + i) / resolution, (j0 + j) / resolution}; }
  /// Cell whose square contains p, or nullopt outside the grid.
  std::optional<CellIndex> cell_of(Vec2 p) const;
  bool operator==(const GridGeometry&) const = default;
};

/// Occupancy of the E-approximation: one bit per cell.
struct Grid {
  GridGeometry geom;
  std::vector<bool> occupancy;

  bool occupied(int i, int j) const { return occupancy[geom.index(i, j)]; }
  std::size_t occupied_count() const;
};

struct RasterOptions {
  /// Free cells added on every side of the scene bounding box.
  int padding = 3;
  std::uint64_t max_cells = 8192ULL * 8192ULL;
};

/// Occupancy of E: the supercover of the boundary curves (a cell is occupied
/// iff its closed square meets a segment, so every segment yields a
/// 4-connected chain) plus every cell whose centre lies in the solid part,
/// found by an even-odd fill of the closed rings.
Grid rasterize(const Scene& scene, double resolution, const RasterOptions& options = {});
/// Supercover of explicit polylines only, without fill. `bounds` fixes the
/// grid extent when the polylines are empty (or to enlarge it).
Grid rasterize(std::span<const Polyline> polylines, const Box& bounds, double resolution,
               const RasterOptions& options = {});

/// Bytes needed for occupancy, labels and distances on a grid of `cells`.
std::uint64_t raster_memory_estimate(std::uint64_t cells);

struct LabeledGrid {
  GridGeometry geom;
  std::vector<std::int32_t> labels;  ///< -1 on occupied cells
  std::vector<std::vector<std::uint32_t>> component_cells;
  std::int32_t unbounded_label = -1;

  std::size_t label_count() const { return component_cells.size(); }
  std::int32_t label_at(int i, int j) const { return labels[geom.index(i, j)]; }
};

/// 4-connected labeling of the free cells with union-find. Labels are
/// renumbered 0..K-1 in row-major first-cell order; the padding ring owns
/// the unbounded label.
LabeledGrid label_complement(const Grid& grid);

/// Exact Euclidean distance transform: squared distances are kept in
/// integer cell units, `distance` converts with h.
struct DistanceField {
  GridGeometry geom;
  std::vector<std::uint32_t> squared;  ///< squared cell offset to nearest occupied centre

  double distance(std::size_t idx) const;
  double distance(int i, int j) const { return distance(geom.index(i, j)); }
  double max_distance() const;
};

/// Two-pass lower-envelope transform (column pass, then parabola envelope per
/// row). Throws DomainError("E empty") when no cell is occupied.
DistanceField distance_to_set(const Grid& grid);

/// Label of the cell containing w; points outside the grid get the unbounded
/// label. Throws DomainError when w lies on an occupied cell.
std::int32_t component_of_point(const LabeledGrid& labeled, Vec2 w);

/// Binary PGM (P5) dumps. Occupancy is 8-bit, the distance field 16-bit
/// scaled to the field maximum. Throws IoError on failure.
void write_occupancy_pgm(const Grid& grid, const std::filesystem::path& path);
void write_distance_pgm(const DistanceField& field, const std::filesystem::path& path);

}  // namespace compss

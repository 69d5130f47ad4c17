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

#include "compss/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <string>

#include "compss/error.hpp"

namespace compss {

std::optional<CellIndex> GridGeometry::cell_of(Vec2 p) const {
  const double u = std::floor(p.x * resolution + 0.5) - i0;
  const double v = std::floor(p.y * resolution + 0.5) - j0;
  if (!(u >= 0 && v >= 0 && u < width && v < height)) return std::nullopt;
  return CellIndex{static_cast<int>(u), static_cast<int>(v)};
}

std::size_t Grid::occupied_count() const {
  return static_cast<std::size_t>(std::count(occupancy.begin(), occupancy.end(), true));
}

std::uint64_t raster_memory_estimate(std::uint64_t cells) {
  // occupancy bit + int32 label + uint32 squared distance
  return cells / 8 + cells * 4 + cells * 4;
}

namespace {

// Slack (in cell units) on the closed cell squares so that segments lying on
// a cell edge mark both neighbours regardless of rounding.
constexpr double kCellSlack = 1e-9;

void mark_segment(Vec2 a, Vec2 b, const GridGeometry& g, std::vector<bool>& occ) {
  const double u0 = a.x * g.resolution - g.i0;
  const double v0 = a.y * g.resolution - g.j0;
  const double u1 = b.x * g.resolution - g.i0;
  const double v1 = b.y * g.resolution - g.j0;
  const double du = u1 - u0;
  const double dv = v1 - v0;
  const int ilo = std::max(0, static_cast<int>(std::ceil(std::min(u0, u1) - 0.5 - kCellSlack)));
  const int ihi = std::min(g.width - 1,
                           static_cast<int>(std::floor(std::max(u0, u1) + 0.5 + kCellSlack)));
  for (int i = ilo; i <= ihi; ++i) {
    const double lo = i - 0.5 - kCellSlack;
    const double hi = i + 0.5 + kCellSlack;
    double t0 = 0.0;
    double t1 = 1.0;
    if (du != 0.0) {
      double ta = (lo - u0) / du;
      double tb = (hi - u0) / du;
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
      if (t0 > t1) continue;
    } else if (u0 < lo || u0 > hi) {
      continue;
    }
    const double va = v0 + t0 * dv;
    const double vb = v0 + t1 * dv;
    const int jlo = std::max(0, static_cast<int>(std::ceil(std::min(va, vb) - 0.5 - kCellSlack)));
    const int jhi = std::min(g.height - 1,
                             static_cast<int>(std::floor(std::max(va, vb) + 0.5 + kCellSlack)));
    for (int j = jlo; j <= jhi; ++j) occ[g.index(i, j)] = true;
  }
}

}  // namespace

Grid rasterize(std::span<const Polyline> polylines, const Box& bounds, double resolution,
               const RasterOptions& options) {
  if (!(resolution >= 16.0)) {
    throw BoundsError("resolution must be >= 16 cells per unit, got " + std::to_string(resolution));
  }
  Box box = bounds;
  for (const Polyline& pl : polylines) box.expand(bounding_box(pl.points));
  if (box.empty()) box = Box{{0, 0}, {1, 1}};

  const double fx0 = std::floor(box.min.x * resolution);
  const double fy0 = std::floor(box.min.y * resolution);
  const double fx1 = std::ceil(box.max.x * resolution);
  const double fy1 = std::ceil(box.max.y * resolution);
  const double w = fx1 - fx0 + 2.0 * options.padding + 1.0;
  const double h = fy1 - fy0 + 2.0 * options.padding + 1.0;
  const double cells = w * h;
  if (cells > static_cast<double>(options.max_cells)) {
    const double mib = static_cast<double>(raster_memory_estimate(static_cast<std::uint64_t>(cells))) /
                       (1024.0 * 1024.0);
    throw ResourceError("grid of " + std::to_string(static_cast<long long>(w)) + " x " +
                        std::to_string(static_cast<long long>(h)) + " cells exceeds the cap of " +
                        std::to_string(options.max_cells) + " cells (needs about " +
                        std::to_string(static_cast<long long>(std::ceil(mib))) + " MiB)");
  }

  Grid grid;
  grid.geom.resolution = resolution;
  grid.geom.i0 = static_cast<int>(fx0) - options.padding;
  grid.geom.j0 = static_cast<int>(fy0) - options.padding;
  grid.geom.width = static_cast<int>(w);
  grid.geom.height = static_cast<int>(h);
  grid.occupancy.assign(grid.geom.size(), false);
  for (const Polyline& pl : polylines) {
    if (pl.points.size() == 1) mark_segment(pl.points[0], pl.points[0], grid.geom, grid.occupancy);
    for (std::size_t s = 0; s < pl.segment_count(); ++s) {
      mark_segment(pl.segment_start(s), pl.segment_end(s), grid.geom, grid.occupancy);
    }
  }
  return grid;
}

namespace {

// Even-odd scanline fill over the closed rings: marks every cell whose centre
// lies inside an odd number of rings.
void fill_closed_rings(std::span<const Polyline> polylines, Grid& grid) {
  const GridGeometry& g = grid.geom;
  const double res = g.resolution;
  std::vector<std::vector<double>> crossings(g.height);
  for (const Polyline& pl : polylines) {
    if (!pl.closed) continue;
    for (std::size_t s = 0; s < pl.segment_count(); ++s) {
      Vec2 a = pl.segment_start(s);
      Vec2 b = pl.segment_end(s);
      if (a.y == b.y) continue;
      if (b.y < a.y) std::swap(a, b);
      // Rows whose centre y satisfies a.y <= y < b.y.
      const int r0 = std::max(0, static_cast<int>(std::ceil(a.y * res)) - g.j0);
      const int r1 = std::min(g.height - 1, static_cast<int>(std::ceil(b.y * res)) - 1 - g.j0);
      for (int j = r0; j <= r1; ++j) {
        const double y = (g.j0 + j) / res;
        if (y < a.y || y >= b.y) continue;
        crossings[j].push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
  }
  for (int j = 0; j < g.height; ++j) {
    auto& xs = crossings[j];
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const int c0 = std::max(0, static_cast<int>(std::ceil(xs[k] * res)) - g.i0);
      const int c1 = std::min(g.width - 1, static_cast<int>(std::floor(xs[k + 1] * res)) - g.i0);
      for (int i = c0; i <= c1; ++i) grid.occupancy[g.index(i, j)] = true;
    }
  }
}

}  // namespace

Grid rasterize(const Scene& scene, double resolution, const RasterOptions& options) {
  Grid grid = rasterize(scene.boundary, scene.bounds, resolution, options);
  fill_closed_rings(scene.boundary, grid);
  return grid;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller index becomes the root, which keeps roots at first-scan cells.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

LabeledGrid label_complement(const Grid& grid) {
  const GridGeometry& g = grid.geom;
  LabeledGrid out;
  out.geom = g;
  out.labels.assign(g.size(), -1);
  UnionFind uf(g.size());
  for (int j = 0; j < g.height; ++j) {
    for (int i = 0; i < g.width; ++i) {
      const std::size_t idx = g.index(i, j);
      if (grid.occupancy[idx]) continue;
      if (i > 0 && !grid.occupancy[idx - 1]) uf.unite(idx, idx - 1);
      if (j > 0 && !grid.occupancy[idx - g.width]) uf.unite(idx, idx - g.width);
    }
  }
  std::vector<std::int32_t> root_label(g.size(), -1);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    if (grid.occupancy[idx]) continue;
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(idx));
    if (root_label[r] < 0) {
      root_label[r] = static_cast<std::int32_t>(out.component_cells.size());
      out.component_cells.emplace_back();
    }
    out.labels[idx] = root_label[r];
    out.component_cells[root_label[r]].push_back(static_cast<std::uint32_t>(idx));
  }
  if (!out.labels.empty()) out.unbounded_label = out.labels[0];
  return out;
}

double DistanceField::distance(std::size_t idx) const {
  return std::sqrt(static_cast<double>(squared[idx])) / geom.resolution;
}

double DistanceField::max_distance() const {
  if (squared.empty()) return 0.0;
  const std::uint32_t m = *std::max_element(squared.begin(), squared.end());
  return std::sqrt(static_cast<double>(m)) / geom.resolution;
}

namespace {

// Intersection abscissa of two parabolas as an exact fraction num/den, den > 0.
struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

bool less_equal(const Fraction& a, const Fraction& b) { return a.num * b.den <= b.num * a.den; }

}  // namespace

DistanceField distance_to_set(const Grid& grid) {
  const GridGeometry& g = grid.geom;
  if (std::find(grid.occupancy.begin(), grid.occupancy.end(), true) == grid.occupancy.end()) {
    throw DomainError("E empty: distance transform needs at least one occupied cell");
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const int w = g.width;
  const int h = g.height;

  // Column pass: vertical offset to the nearest occupied cell.
  std::vector<std::int64_t> col(g.size(), kInf);
  for (int i = 0; i < w; ++i) {
    std::int64_t last = kInf;
    for (int j = 0; j < h; ++j) {
      if (grid.occupancy[g.index(i, j)]) last = j;
      if (last != kInf) col[g.index(i, j)] = j - last;
    }
    last = kInf;
    for (int j = h - 1; j >= 0; --j) {
      if (grid.occupancy[g.index(i, j)]) last = j;
      if (last != kInf) col[g.index(i, j)] = std::min(col[g.index(i, j)], last - j);
    }
  }

  DistanceField field;
  field.geom = g;
  field.squared.assign(g.size(), 0);
  std::vector<std::int64_t> f(w);
  std::vector<int> v(w);
  std::vector<Fraction> z(w + 1);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const std::int64_t c = col[g.index(i, j)];
      f[i] = c == kInf ? kInf : c * c;
    }
    // Lower envelope of q -> f(q) + (x - q)^2 over finite f.
    int k = -1;
    for (int q = 0; q < w; ++q) {
      if (f[q] == kInf) continue;
      Fraction s{0, 1};
      while (k >= 0) {
        const int p = v[k];
        s = {(f[q] + static_cast<std::int64_t>(q) * q) - (f[p] + static_cast<std::int64_t>(p) * p),
             2 * static_cast<std::int64_t>(q - p)};
        if (k > 0 && less_equal(s, z[k])) {
          --k;
        } else {
          break;
        }
      }
      ++k;
      v[k] = q;
      z[k] = k == 0 ? Fraction{-1, 0} : s;
    }
    // z[m] (m >= 1) is where parabola v[m] takes over from v[m-1].
    int m = 0;
    for (int x = 0; x < w; ++x) {
      while (m < k && z[m + 1].num <= static_cast<std::int64_t>(x) * z[m + 1].den) ++m;
      const std::int64_t dx = x - v[m];
      field.squared[g.index(x, j)] = static_cast<std::uint32_t>(dx * dx + f[v[m]]);
    }
  }
  return field;
}

std::int32_t component_of_point(const LabeledGrid& labeled, Vec2 w) {
  const auto cell = labeled.geom.cell_of(w);
  // Beyond the free padding ring everything belongs to the unbounded component.
  if (!cell) return labeled.unbounded_label;
  const std::int32_t label = labeled.label_at(cell->i, cell->j);
  if (label < 0) throw DomainError("point on E within resolution; refine grid or move point");
  return label;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_occupancy_pgm(const Grid& grid, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  const GridGeometry& g = grid.geom;
  out << "P5\n" << g.width << ' ' << g.height << "\n255\n";
  std::vector<char> row(g.width);
  for (int j = g.height - 1; j >= 0; --j) {
    for (int i = 0; i < g.width; ++i) row[i] = grid.occupied(i, j) ? 0 : static_cast<char>(255);
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw IoError("failed writing " + path.string());
}

void write_distance_pgm(const DistanceField& field, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  const GridGeometry& g = field.geom;
  out << "P5\n" << g.width << ' ' << g.height << "\n65535\n";
  const double peak = std::max(field.max_distance(), 1e-300);
  std::vector<char> row(2 * static_cast<std::size_t>(g.width));
  for (int j = g.height - 1; j >= 0; --j) {
    for (int i = 0; i < g.width; ++i) {
      const auto v = static_cast<std::uint16_t>(std::lround(65535.0 * field.distance(i, j) / peak));
      row[2 * i] = static_cast<char>(v >> 8);
      row[2 * i + 1] = static_cast<char>(v & 0xff);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace compss

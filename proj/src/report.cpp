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

#include "compss/report.hpp"

#include <chrono>
#include <fstream>

#include "compss/error.hpp"
#include "compss/raster.hpp"

namespace compss {

using json = nlohmann::ordered_json;

namespace {

class StageClock {
 public:
  StageClock(std::vector<StageTiming>& sink, std::string stage)
      : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~StageClock() {
    const auto dt = std::chrono::steady_clock::now() - start_;
    sink_.push_back({stage_, std::chrono::duration<double>(dt).count()});
  }

 private:
  std::vector<StageTiming>& sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Vec2> default_points(const Scene& scene, double h) {
  std::vector<Vec2> pts;
  if (!scene.components.empty()) pts.push_back(centroid(scene.components.front().polygon));
  pts.push_back(scene.bounds.min - Vec2{2.0 * h, 2.0 * h});
  return pts;
}

TopologyBlock run_topology(const RunConfig& config, const Scene& scene, const Grid& grid,
                           const DistanceField* field) {
  TopologyBlock block;
  const LabeledGrid labeled = label_complement(grid);
  block.unbounded_label = labeled.unbounded_label;
  block.label_count = labeled.label_count();
  const std::vector<Vec2> pts = config.points.empty() ? default_points(scene, grid.geom.h()) : config.points;
  for (Vec2 p : pts) {
    PointAnswer ans;
    ans.point = p;
    try {
      ans.label = component_of_point(labeled, p);
    } catch (const DomainError& e) {
      ans.error = e.what();
    }
    try {
      ans.radial = radial_query(scene, p, field);
    } catch (const DomainError& e) {
      if (ans.error.empty()) ans.error = e.what();
    }
    block.points.push_back(std::move(ans));
  }
  for (std::size_t i = 0; i < block.points.size(); ++i) {
    for (std::size_t j = i + 1; j < block.points.size(); ++j) {
      const auto& a = block.points[i].label;
      const auto& b = block.points[j].label;
      block.equivalent.push_back(a && b ? std::optional<bool>(*a == *b) : std::nullopt);
    }
  }
  return block;
}

}  // namespace

std::vector<double> radial_scales(const RunConfig& config, const Scene& scene) {
  if (config.scales) return *config.scales;
  return default_scales(config.system, scene, 8.0 / config.resolution);
}

Report run_report(const RunConfig& config) {
  validate_config(config);
  Report rep;
  rep.config = config;
  GenerateOptions gen;
  gen.max_depth = kMaxDepth;

  for (int d = 1; d <= config.depth; ++d) {
    const std::string tag = "depth " + std::to_string(d);
    Scene scene;
    {
      StageClock clock(rep.timings, tag + ": generate");
      scene = generate_scene(config.system, d, gen);
    }
    const bool last = d == config.depth;
    DepthReport dr;
    dr.depth = d;
    dr.component_count = scene.components.size();
    dr.resolution = config.resolution;

    std::optional<SimilarityPartition> partition;
    auto classes = [&]() -> const SimilarityPartition& {
      if (!partition) {
        StageClock clock(rep.timings, tag + ": similarity");
        partition = similarity_classes(scene);
      }
      return *partition;
    };

    if (config.wants(Analysis::kShape)) {
      StageClock clock(rep.timings, tag + ": shape");
      for (const Component& c : scene.components) {
        const ShapeMetrics m = shape_metrics(c);
        if (!dr.roundness_min || m.roundness < *dr.roundness_min) {
          dr.roundness_min = m.roundness;
          dr.roundness_witness = c.id;
        }
        if (last) rep.shapes.push_back({c.id, c.generation, m, -1});
      }
    }
    if (config.wants(Analysis::kSeparation) && scene.components.size() >= 2) {
      StageClock clock(rep.timings, tag + ": separation");
      dr.separation = separation_constant(scene);
    }

    const bool need_grid = config.wants(Analysis::kPorosity) || config.wants(Analysis::kMeasure) ||
                           (last && config.wants(Analysis::kTopology));
    std::optional<Grid> grid;
    std::optional<DistanceField> field;
    const std::vector<double> scales = radial_scales(config, scene);
    if (need_grid) {
      StageClock clock(rep.timings, tag + ": raster");
      RasterOptions options;
      if (config.wants(Analysis::kPorosity)) options = porosity_raster_options(scales, config.resolution);
      grid = rasterize(scene, config.resolution, options);
      if (config.wants(Analysis::kPorosity) || config.wants(Analysis::kTopology)) {
        field = distance_to_set(*grid);
      }
    }
    if (config.wants(Analysis::kPorosity)) {
      StageClock clock(rep.timings, tag + ": porosity");
      dr.porosity = porosity_constant(scene, *field, scales);
    }
    if (config.wants(Analysis::kComponentInBall)) {
      StageClock clock(rep.timings, tag + ": component_in_ball");
      dr.component_in_ball = component_in_ball_constant(scene, scales, 0.5 / config.resolution);
    }
    if (config.wants(Analysis::kPathConstant)) {
      const SimilarityPartition& part = classes();
      StageClock clock(rep.timings, tag + ": path_constant");
      // The sampled constant is similarity invariant, so one member per
      // class suffices.
      for (const auto& members : part.classes) {
        const Component& c = scene.components[members.front()];
        const PathReport p = boundary_path_constant(c, config.samples_per_edge);
        if (!dr.path || p.k > dr.path->k) {
          dr.path = p;
          dr.path_witness = c.id;
        }
      }
    }
    if (config.wants(Analysis::kSimilarity)) dr.similarity_class_count = classes().classes.size();
    if (config.wants(Analysis::kMeasure)) dr.measure = measure_summary(scene, grid ? &*grid : nullptr);

    if (last) {
      if (config.wants(Analysis::kSimilarity)) {
        rep.classes = classes();
        for (ShapeRow& row : rep.shapes) row.similarity_class = rep.classes->class_of[row.id];
      }
      if (config.wants(Analysis::kTopology)) {
        StageClock clock(rep.timings, tag + ": topology");
        rep.topology = run_topology(config, scene, *grid, field ? &*field : nullptr);
      }
      rep.scene = std::move(scene);
    }
    rep.depths.push_back(std::move(dr));
  }
  return rep;
}

namespace {

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

json radial_json(const RadialConstant& rc, bool qualitative) {
  json j;
  j["value"] = rc.value;
  if (qualitative) j["qualitative_fraction"] = rc.qualitative_fraction;
  j["sample_count"] = rc.sample_count;
  j["scales"] = rc.scales_tested;
  j["worst"] = {{"x", point_json(rc.worst.x)}, {"r", rc.worst.r}, {"ratio", rc.worst.ratio}};
  json per = json::array();
  for (const RadialWitness& w : rc.witnesses) {
    per.push_back({{"r", w.r}, {"ratio", w.ratio}, {"x", point_json(w.x)}});
  }
  j["per_scale"] = std::move(per);
  return j;
}

json separation_json(const SeparationReport& s) {
  json j;
  j["status"] = s.unbounded ? "UNBOUNDED" : "bounded";
  if (s.unbounded) {
    j["constant"] = "UNBOUNDED";
  } else {
    j["constant"] = s.constant;
  }
  j["witness"] = {{"components", json::array({s.witness.first, s.witness.second})},
                  {"points", json::array({point_json(s.witness_points.a), point_json(s.witness_points.b)})},
                  {"distance", s.witness_distance}};
  j["min_gap"] = s.min_gap;
  j["min_gap_pair"] = json::array({s.min_gap_pair.first, s.min_gap_pair.second});
  return j;
}

json depth_json(const DepthReport& d) {
  json j;
  j["depth"] = d.depth;
  j["resolution"] = d.resolution;
  j["component_count"] = d.component_count;
  if (d.roundness_min) {
    j["roundness"] = {{"min", *d.roundness_min}, {"witness_component", d.roundness_witness}};
  }
  if (d.separation) j["separation"] = separation_json(*d.separation);
  if (d.porosity) j["porosity"] = radial_json(*d.porosity, false);
  if (d.component_in_ball) j["component_in_ball"] = radial_json(*d.component_in_ball, true);
  if (d.path) {
    j["path_constant"] = {{"k", d.path->k},
                          {"samples_per_edge", d.path->samples_per_edge},
                          {"witness",
                           {{"component", d.path_witness},
                            {"x", point_json(d.path->x)},
                            {"y", point_json(d.path->y)},
                            {"geodesic", d.path->geodesic},
                            {"chord", d.path->chord}}}};
  }
  if (d.similarity_class_count) j["similarity"] = {{"class_count", *d.similarity_class_count}};
  if (d.measure) {
    json m;
    m["seed_area"] = d.measure->seed_area;
    m["component_area"] = d.measure->component_area;
    m["area_estimate"] = d.measure->area_estimate;
    m["perimeter_sum"] = d.measure->perimeter_sum;
    if (d.measure->occupied_area) m["occupied_area"] = *d.measure->occupied_area;
    j["measure"] = std::move(m);
  }
  return j;
}

}  // namespace

json report_to_json(const Report& rep) {
  const RunConfig& c = rep.config;
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", "compss"}, {"version", kToolVersion}};
  j["units"] = {{"length", "scene units"},
                {"area", "scene units^2"},
                {"resolution", "cells per scene unit"},
                {"constants", "dimensionless"}};

  json cfg;
  cfg["system"] = c.system_name;
  cfg["depth"] = c.depth;
  cfg["resolution"] = c.resolution;
  json metrics = json::array();
  for (Analysis a : c.metrics) metrics.push_back(std::string(analysis_name(a)));
  cfg["metrics"] = std::move(metrics);
  if (c.scales) {
    cfg["scales"] = *c.scales;
  } else {
    cfg["scales"] = "default";
  }
  cfg["samples_per_edge"] = c.samples_per_edge;
  json maps = json::array();
  for (const SimilarityMap& m : c.system.maps) {
    maps.push_back({{"scale", m.scale()},
                    {"rotation", m.rotation()},
                    {"reflect", m.reflect()},
                    {"translation", point_json(m.translation())}});
  }
  cfg["maps"] = std::move(maps);
  j["config"] = std::move(cfg);

  json depths = json::array();
  for (const DepthReport& d : rep.depths) depths.push_back(depth_json(d));
  j["depths"] = std::move(depths);

  if (!rep.shapes.empty()) {
    json rows = json::array();
    for (const ShapeRow& r : rep.shapes) {
      json row;
      row["id"] = r.id;
      row["generation"] = r.generation;
      row["diameter"] = r.metrics.diameter;
      row["inradius"] = r.metrics.inradius;
      row["inradius_error"] = r.metrics.inradius_error;
      row["roundness"] = r.metrics.roundness;
      row["convex"] = r.metrics.convex;
      row["incenter"] = point_json(r.metrics.incenter);
      if (r.similarity_class >= 0) row["similarity_class"] = r.similarity_class;
      rows.push_back(std::move(row));
    }
    j["components"] = std::move(rows);
  }

  if (rep.classes) {
    json classes = json::array();
    for (std::size_t k = 0; k < rep.classes->classes.size(); ++k) {
      json cls;
      cls["class"] = k;
      cls["size"] = rep.classes->classes[k].size();
      cls["members"] = rep.classes->classes[k];
      json canon = json::array();
      for (Vec2 p : rep.classes->representatives[k]) canon.push_back(point_json(p));
      cls["canonical_form"] = std::move(canon);
      classes.push_back(std::move(cls));
    }
    j["similarity_classes"] = std::move(classes);
  }

  if (rep.topology) {
    const TopologyBlock& t = *rep.topology;
    json top;
    top["depth"] = c.depth;
    top["resolution"] = c.resolution;
    top["label_count"] = t.label_count;
    top["unbounded_label"] = t.unbounded_label;
    json pts = json::array();
    for (const PointAnswer& a : t.points) {
      json p;
      p["point"] = point_json(a.point);
      if (a.label) {
        p["label"] = *a.label;
        p["unbounded"] = *a.label == t.unbounded_label;
      } else {
        p["label"] = nullptr;
      }
      if (a.radial) {
        p["dist_to_E"] = a.radial->dist_to_e;
        p["lipschitz_bound"] = a.radial->lipschitz_bound;
        p["nearest_on_E"] = point_json(a.radial->nearest);
        if (a.radial->raster_distance) p["raster_dist_to_E"] = *a.radial->raster_distance;
      }
      if (!a.error.empty()) p["error"] = a.error;
      pts.push_back(std::move(p));
    }
    top["points"] = std::move(pts);
    json pairs = json::array();
    std::size_t k = 0;
    for (std::size_t a = 0; a < t.points.size(); ++a) {
      for (std::size_t b = a + 1; b < t.points.size(); ++b, ++k) {
        json v = t.equivalent[k] ? json(*t.equivalent[k]) : json(nullptr);
        pairs.push_back({{"pair", json::array({a, b})}, {"homotopy_equivalent", v}});
      }
    }
    top["pairs"] = std::move(pairs);
    j["topology"] = std::move(top);
  }

  if (c.timings) {
    json times = json::array();
    for (const StageTiming& s : rep.timings) times.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
    j["timings"] = std::move(times);
  }
  return j;
}

std::string report_to_string(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

void write_report(const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << report_to_string(report);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace compss

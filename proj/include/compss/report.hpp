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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "compss/config.hpp"
#include "compss/ifs.hpp"
#include "compss/metrics.hpp"
#include "compss/topology.hpp"

#include <json.hpp>

namespace compss {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "compss.report/1";

/// Constants computed on the scene of one depth.
struct DepthReport {
  int depth = 0;
  std::size_t component_count = 0;
  double resolution = 0.0;

  std::optional<double> roundness_min;
  int roundness_witness = -1;
  std::optional<SeparationReport> separation;
  std::optional<RadialConstant> porosity;
  std::optional<RadialConstant> component_in_ball;
  std::optional<PathReport> path;
  int path_witness = -1;  ///< component attaining the path constant
  std::optional<std::size_t> similarity_class_count;
  std::optional<MeasureSummary> measure;
};

struct ShapeRow {
  int id = 0;
  int generation = 0;
  ShapeMetrics metrics;
  int similarity_class = -1;
};

struct PointAnswer {
  Vec2 point;
  std::optional<int> label;
  std::optional<RadialMapQuery> radial;
  std::string error;  ///< set when the point could not be classified
};

struct TopologyBlock {
  std::vector<PointAnswer> points;
  int unbounded_label = -1;
  std::size_t label_count = 0;
  /// Verdict per pair (i < j), row-major; nullopt when either point failed.
  std::vector<std::optional<bool>> equivalent;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct Report {
  RunConfig config;
  std::vector<DepthReport> depths;
  std::vector<ShapeRow> shapes;  ///< final depth
  std::optional<SimilarityPartition> classes;
  std::optional<TopologyBlock> topology;
  std::vector<StageTiming> timings;
  Scene scene;  ///< final-depth scene
};

/// Runs every requested analysis at depths 1..config.depth. Porosity uses a
/// raster of each depth; labeling and topology use the final depth.
Report run_report(const RunConfig& config);

/// Scales used for the radial constants at a depth: config.scales when set,
/// otherwise default_scales with the 8h raster floor.
std::vector<double> radial_scales(const RunConfig& config, const Scene& scene);

/// Deterministic JSON with keys in fixed order.
nlohmann::ordered_json report_to_json(const Report& report);
std::string report_to_string(const Report& report);

/// Writes the JSON report; throws IoError naming the path on failure.
void write_report(const Report& report, const std::filesystem::path& path);

}  // namespace compss

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

// Run configuration. The grammar is line oriented:
//
//   # comment
//   preset = "sierpinski-carpet"
//   depth = 4
//   scales = [0.5, 0.25]
//   metrics = ["separation", "porosity"]
//   custom.maps[0].translation = [0, 0]
//   custom.seed = [[0, 0], [1, 0], [1, 1], [0, 1]]
//
// Strings are double quoted, lists bracketed (and may span lines), `#`
// starts a comment outside strings.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compss/geometry.hpp"
#include "compss/ifs.hpp"

namespace compss {

enum class Analysis {
  kShape,
  kSeparation,
  kPorosity,
  kComponentInBall,
  kPathConstant,
  kSimilarity,
  kMeasure,
  kTopology,
};

std::string_view analysis_name(Analysis a);
const std::vector<Analysis>& all_analyses();

struct RunConfig {
  std::string system_name;  ///< preset name, or "custom"
  IfsSystem system;
  int depth = 4;
  double resolution = 729.0;
  std::vector<Analysis> metrics = all_analyses();
  std::optional<std::vector<double>> scales;
  int samples_per_edge = 32;
  std::vector<Vec2> points;  ///< topology query points
  std::optional<std::string> out;
  std::optional<std::string> svg;
  bool timings = false;

  bool wants(Analysis a) const;
};

inline constexpr int kMaxDepth = 8;

/// Parses and validates a configuration document, applying defaults.
/// Throws ConfigError naming the offending key and constraint.
RunConfig parse_config(std::string_view text);

/// Reads a file and parses it; throws IoError when unreadable.
RunConfig load_config(const std::filesystem::path& path);

/// Re-checks the numeric constraints (after command-line overrides).
void validate_config(const RunConfig& config);

}  // namespace compss

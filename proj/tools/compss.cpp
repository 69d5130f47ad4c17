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

// Command-line front end: `analyze` writes the JSON report (and optionally
// an SVG), `classify` answers homotopy questions for query points.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compss/config.hpp"
#include "compss/error.hpp"
#include "compss/raster.hpp"
#include "compss/report.hpp"
#include "compss/svg.hpp"
#include "compss/topology.hpp"

namespace {

using namespace compss;

Vec2 parse_point(const std::string& text) {
  std::istringstream in(text);
  Vec2 p;
  char comma = 0;
  if (!(in >> p.x >> comma >> p.y) || comma != ',' || !(in >> std::ws).eof()) {
    throw ConfigError("--point: expected X,Y but got \"" + text + "\"");
  }
  return p;
}

void print_summary(const Report& rep) {
  for (const DepthReport& d : rep.depths) {
    std::fprintf(stderr, "depth %d: %zu components", d.depth, d.component_count);
    if (d.separation) {
      if (d.separation->unbounded) {
        std::fprintf(stderr, ", C = UNBOUNDED");
      } else {
        std::fprintf(stderr, ", C = %.9g", d.separation->constant);
      }
    }
    if (d.roundness_min) std::fprintf(stderr, ", roundness = %.9g", *d.roundness_min);
    if (d.porosity) std::fprintf(stderr, ", porosity = %.6g", d.porosity->value);
    if (d.component_in_ball) std::fprintf(stderr, ", cib = %.6g", d.component_in_ball->value);
    if (d.path) std::fprintf(stderr, ", k = %.9g", d.path->k);
    std::fputc('\n', stderr);
  }
}

int run_analyze(const std::string& config_path, const std::optional<std::string>& out,
                const std::optional<std::string>& svg, std::optional<int> depth,
                std::optional<double> resolution, bool timings) {
  RunConfig cfg = load_config(config_path);
  if (depth) cfg.depth = *depth;
  if (resolution) cfg.resolution = *resolution;
  if (out) cfg.out = *out;
  if (svg) cfg.svg = *svg;
  if (timings) cfg.timings = true;
  validate_config(cfg);

  const Report rep = run_report(cfg);
  if (cfg.out) {
    write_report(rep, *cfg.out);
    print_summary(rep);
  } else {
    std::cout << report_to_string(rep);
  }
  if (cfg.svg) render_svg(rep.scene, rep, *cfg.svg);
  return 0;
}

int run_classify(const std::string& config_path, const std::vector<std::string>& point_args,
                 std::optional<int> depth, std::optional<double> resolution) {
  RunConfig cfg = load_config(config_path);
  if (depth) cfg.depth = *depth;
  if (resolution) cfg.resolution = *resolution;
  validate_config(cfg);
  std::vector<Vec2> pts;
  for (const std::string& s : point_args) pts.push_back(parse_point(s));

  const Scene scene = generate_scene(cfg.system, cfg.depth, {kMaxDepth, 1000000});
  const LabeledGrid labeled = label_complement(rasterize(scene, cfg.resolution));

  std::vector<std::optional<int>> labels;
  int status = 0;
  for (Vec2 p : pts) {
    try {
      const int label = component_of_point(labeled, p);
      labels.push_back(label);
      std::printf("(%.9g, %.9g): component %d%s\n", p.x, p.y, label,
                  label == labeled.unbounded_label ? " (unbounded)" : "");
    } catch (const DomainError& e) {
      labels.push_back(std::nullopt);
      std::printf("(%.9g, %.9g): error: %s\n", p.x, p.y, e.what());
      status = 1;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const char* verdict = "undetermined";
      if (labels[i] && labels[j]) verdict = *labels[i] == *labels[j] ? "equivalent" : "not equivalent";
      std::printf("points %zu and %zu: %s\n", i, j, verdict);
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of complementary components of self-similar planar sets"};
  app.set_version_flag("--version", std::string(compss::kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out, svg;
  std::optional<int> depth;
  std::optional<double> resolution;
  bool timings = false;
  std::vector<std::string> points;

  CLI::App* analyze = app.add_subcommand("analyze", "Compute constants at depths 1..N and write a JSON report");
  analyze->add_option("--config", config_path, "Configuration file")->required();
  analyze->add_option("--out", out, "Report path (stdout when omitted)");
  analyze->add_option("--svg", svg, "SVG figure path");
  analyze->add_option("--depth", depth, "Override the configured depth");
  analyze->add_option("--resolution", resolution, "Override the configured resolution");
  analyze->add_flag("--timings", timings, "Include wall-clock stage timings");

  CLI::App* classify = app.add_subcommand("classify", "Decide homotopy equivalence of query points");
  classify->add_option("--config", config_path, "Configuration file")->required();
  classify->add_option("--point", points, "Query point X,Y (repeatable)")->required();
  classify->add_option("--depth", depth, "Override the configured depth");
  classify->add_option("--resolution", resolution, "Override the configured resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(config_path, out, svg, depth, resolution, timings);
    return run_classify(config_path, points, depth, resolution);
  } catch (const compss::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const compss::BoundsError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const compss::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "compss/config.hpp"
#include "compss/error.hpp"
#include "compss/metrics.hpp"
#include "compss/raster.hpp"
#include "compss/report.hpp"
#include "compss/topology.hpp"

namespace py = pybind11;

namespace {

using Point = std::pair<double, double>;

compss::Polygon to_polygon(const std::vector<Point>& pts) {
  compss::Polygon out;
  for (const auto& [x, y] : pts) out.push_back({x, y});
  return out;
}

std::vector<Point> to_points(const compss::Polygon& poly) {
  std::vector<Point> out;
  for (const compss::Vec2& p : poly) out.emplace_back(p.x, p.y);
  return out;
}

py::dict shape_dict(const compss::ShapeMetrics& m) {
  py::dict d;
  d["diameter"] = m.diameter;
  d["inradius"] = m.inradius;
  d["roundness"] = m.roundness;
  d["incenter"] = Point{m.incenter.x, m.incenter.y};
  d["convex"] = m.convex;
  d["inradius_error"] = m.inradius_error;
  return d;
}

compss::Scene scene_for(const std::string& preset, int depth) {
  return compss::generate_scene(compss::build_preset(preset), depth);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of compss";
  m.attr("__version__") = compss::kToolVersion;

  auto base = py::register_exception<compss::Error>(m, "Error");
  py::register_exception<compss::ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<compss::BoundsError>(m, "BoundsError", base.ptr());
  py::register_exception<compss::ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<compss::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<compss::NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<compss::IoError>(m, "IoError", base.ptr());

  m.def(
      "analyze_text",
      [](const std::string& text) {
        const compss::RunConfig cfg = compss::parse_config(text);
        py::gil_scoped_release release;
        return compss::report_to_string(compss::run_report(cfg));
      },
      py::arg("config_text"), "Run a full analysis and return the JSON report text.");

  m.def(
      "components",
      [](const std::string& preset, int depth) {
        std::vector<std::vector<Point>> out;
        for (const compss::Component& c : scene_for(preset, depth).components) out.push_back(to_points(c.polygon));
        return out;
      },
      py::arg("preset"), py::arg("depth"), "Component polygons in canonical order.");

  m.def("component_count", [](const std::string& preset, int depth) {
    return compss::component_count(compss::build_preset(preset), depth);
  });

  m.def(
      "shape_metrics",
      [](const std::vector<Point>& polygon) { return shape_dict(compss::shape_metrics(to_polygon(polygon))); },
      py::arg("polygon"));

  m.def(
      "separation_constant",
      [](const std::string& preset, int depth) -> py::object {
        const compss::SeparationReport r = compss::separation_constant(scene_for(preset, depth));
        if (r.unbounded) return py::none();
        return py::float_(r.constant);
      },
      py::arg("preset"), py::arg("depth"), "Separation constant, or None when unbounded.");

  m.def(
      "path_constant",
      [](const std::vector<Point>& polygon, int samples_per_edge) {
        return compss::boundary_path_constant(to_polygon(polygon), samples_per_edge).k;
      },
      py::arg("polygon"), py::arg("samples_per_edge") = 32);

  m.def(
      "measure",
      [](const std::string& preset, int depth) {
        const compss::MeasureSummary s = compss::measure_summary(scene_for(preset, depth));
        py::dict d;
        d["area_estimate"] = s.area_estimate;
        d["perimeter_sum"] = s.perimeter_sum;
        return d;
      },
      py::arg("preset"), py::arg("depth"));

  m.def(
      "winding_number",
      [](const std::vector<Point>& loop, Point w) {
        return compss::winding_number(to_polygon(loop), {w.first, w.second});
      },
      py::arg("loop"), py::arg("point"));

  m.def(
      "classify",
      [](const std::string& preset, int depth, double resolution, const std::vector<Point>& points) {
        const compss::LabeledGrid labeled =
            compss::label_complement(compss::rasterize(scene_for(preset, depth), resolution));
        std::vector<int> labels;
        for (const auto& [x, y] : points) labels.push_back(compss::component_of_point(labeled, {x, y}));
        return std::make_pair(labels, static_cast<int>(labeled.unbounded_label));
      },
      py::arg("preset"), py::arg("depth"), py::arg("resolution"), py::arg("points"),
      "Complement label per point and the unbounded label.");
}

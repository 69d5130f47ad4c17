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

#include "compss/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "compss/error.hpp"

namespace compss {

namespace {

constexpr double kCanvas = 800.0;

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const Box& b) : box_(b) {
    const double side = std::max({b.width(), b.height(), 1e-12});
    margin_ = 0.05 * side;
    scale_ = kCanvas / (side + 2 * margin_);
  }

  double x(double v) const { return (v - box_.min.x + margin_) * scale_; }
  double y(double v) const { return (box_.max.y - v + margin_) * scale_; }
  double len(double v) const { return v * scale_; }
  double width() const { return (box_.width() + 2 * margin_) * scale_; }
  double height() const { return (box_.height() + 2 * margin_) * scale_; }

  std::string points(std::span<const Vec2> pts) const {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += num(x(pts[i].x)) + "," + num(y(pts[i].y));
    }
    return s;
  }

 private:
  Box box_;
  double margin_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace

std::string svg_document(const Scene& scene, const Report& report) {
  const Canvas cv(scene.bounds);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" +
         num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double stroke = std::max(0.25, std::min(1.5, 400.0 / std::max<std::size_t>(1, scene.components.size())));
  out += "<g id=\"components\" stroke=\"black\" stroke-width=\"" + num(stroke) + "\">\n";
  for (std::size_t i = 0; i < scene.components.size(); ++i) {
    int cls = 0;
    if (report.classes && i < report.classes->class_of.size()) cls = report.classes->class_of[i];
    const char* fill = kPalette[static_cast<std::size_t>(cls) % std::size(kPalette)];
    out += "<polygon points=\"" + cv.points(scene.components[i].polygon) + "\" fill=\"" + fill + "\"/>\n";
  }
  out += "</g>\n";
  out += "<polygon id=\"seed\" points=\"" + cv.points(scene.seed) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(stroke) + "\"/>\n";

  if (!report.depths.empty()) {
    const DepthReport& d = report.depths.back();
    out += "<g id=\"witnesses\" fill=\"none\" stroke-width=\"2\">\n";
    if (d.separation) {
      const SeparationReport& s = *d.separation;
      for (int id : {s.witness.first, s.witness.second}) {
        if (id < 0 || static_cast<std::size_t>(id) >= scene.components.size()) continue;
        out += "<polygon points=\"" + cv.points(scene.components[id].polygon) + "\" stroke=\"#d62728\"/>\n";
      }
      const Vec2 a = s.witness_points.a;
      const Vec2 b = s.witness_points.b;
      out += "<line x1=\"" + num(cv.x(a.x)) + "\" y1=\"" + num(cv.y(a.y)) + "\" x2=\"" + num(cv.x(b.x)) +
             "\" y2=\"" + num(cv.y(b.y)) + "\" stroke=\"#d62728\"/>\n";
      out += "<circle cx=\"" + num(cv.x(a.x)) + "\" cy=\"" + num(cv.y(a.y)) +
             "\" r=\"4.000000\" fill=\"#d62728\" stroke=\"none\"/>\n";
    }
    if (d.porosity) {
      const RadialWitness& w = d.porosity->worst;
      out += "<circle cx=\"" + num(cv.x(w.x.x)) + "\" cy=\"" + num(cv.y(w.x.y)) + "\" r=\"" + num(cv.len(w.r)) +
             "\" stroke=\"#1f77b4\"/>\n";
    }
    if (d.path) {
      const PathReport& p = *d.path;
      out += "<line x1=\"" + num(cv.x(p.x.x)) + "\" y1=\"" + num(cv.y(p.x.y)) + "\" x2=\"" + num(cv.x(p.y.x)) +
             "\" y2=\"" + num(cv.y(p.y.y)) + "\" stroke=\"#2ca02c\" stroke-dasharray=\"4 2\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

void render_svg(const Scene& scene, const Report& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << svg_document(scene, report);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace compss

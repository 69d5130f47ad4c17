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
#include <string>

#include "compss/ifs.hpp"
#include "compss/report.hpp"

namespace compss {

/// SVG of the scene with E stroked in black, components filled by
/// similarity class and the final-depth witnesses overlaid: the separation
/// pair, the worst porosity ball and the path constant chord.
std::string svg_document(const Scene& scene, const Report& report);

/// Writes svg_document; throws IoError naming the path.
void render_svg(const Scene& scene, const Report& report, const std::filesystem::path& path);

}  // namespace compss

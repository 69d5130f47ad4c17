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

#include "compss/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "compss/error.hpp"

namespace compss {

std::string_view analysis_name(Analysis a) {
  switch (a) {
    case Analysis::kShape: return "shape";
    case Analysis::kSeparation: return "separation";
    case Analysis::kPorosity: return "porosity";
    case Analysis::kComponentInBall: return "component_in_ball";
    case Analysis::kPathConstant: return "path_constant";
    case Analysis::kSimilarity: return "similarity";
    case Analysis::kMeasure: return "measure";
    case Analysis::kTopology: return "topology";
  }
  return "?";
}

const std::vector<Analysis>& all_analyses() {
  static const std::vector<Analysis> all = {
      Analysis::kShape,        Analysis::kSeparation, Analysis::kPorosity, Analysis::kComponentInBall,
      Analysis::kPathConstant, Analysis::kSimilarity, Analysis::kMeasure,  Analysis::kTopology,
  };
  return all;
}

bool RunConfig::wants(Analysis a) const {
  return std::find(metrics.begin(), metrics.end(), a) != metrics.end();
}

namespace {

struct Value {
  enum class Kind { kNumber, kString, kBool, kList };
  Kind kind = Kind::kNumber;
  double number = 0.0;
  bool integral = false;
  std::string text;
  bool flag = false;
  std::vector<Value> items;
};

class ValueParser {
 public:
  ValueParser(std::string_view src, const std::string& key) : src_(src), key_(key) {}

  Value parse_document() {
    Value v = parse_value();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected trailing text");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("key '" + key_ + "': " + what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  Value parse_value() {
    skip_space();
    if (pos_ >= src_.size()) fail("missing value");
    const char c = src_[pos_];
    if (c == '[') return parse_list();
    if (c == '"') return parse_string();
    if (src_.substr(pos_, 4) == "true") {
      pos_ += 4;
      Value v;
      v.kind = Value::Kind::kBool;
      v.flag = true;
      return v;
    }
    if (src_.substr(pos_, 5) == "false") {
      pos_ += 5;
      Value v;
      v.kind = Value::Kind::kBool;
      return v;
    }
    return parse_number();
  }

  Value parse_list() {
    Value v;
    v.kind = Value::Kind::kList;
    ++pos_;
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ']') {
      ++pos_;
      return v;
    }
    while (true) {
      v.items.push_back(parse_value());
      skip_space();
      if (pos_ >= src_.size()) fail("unterminated list");
      if (src_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (src_[pos_] == ']') {
        ++pos_;
        return v;
      }
      fail("expected ',' or ']' in list");
    }
  }

  Value parse_string() {
    Value v;
    v.kind = Value::Kind::kString;
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
      v.text.push_back(src_[pos_++]);
    }
    if (pos_ >= src_.size()) fail("unterminated string");
    ++pos_;
    return v;
  }

  Value parse_number() {
    std::size_t end = pos_;
    while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                 src_[end] == '.' || src_[end] == '-' || src_[end] == '+')) {
      ++end;
    }
    const std::string_view tok = src_.substr(pos_, end - pos_);
    Value v;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v.number);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v.number)) {
      fail("expected a number, string, boolean or list, got '" + std::string(tok) + "'");
    }
    v.integral = tok.find_first_of(".eE") == std::string_view::npos;
    pos_ = end;
    return v;
  }

  std::string_view src_;
  std::string key_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
    if (in_string) continue;
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
  }
  return depth;
}

[[noreturn]] void type_error(const std::string& key, const std::string& expected) {
  throw ConfigError("key '" + key + "': expected " + expected);
}

double as_number(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kNumber) type_error(key, "a number");
  return v.number;
}

int as_int(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kNumber || !v.integral) type_error(key, "an integer");
  if (std::abs(v.number) > 1e9) throw ConfigError("key '" + key + "': integer out of range");
  return static_cast<int>(v.number);
}

std::string as_string(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kString) type_error(key, "a quoted string");
  return v.text;
}

bool as_bool(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kBool) type_error(key, "true or false");
  return v.flag;
}

Vec2 as_point(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kList || v.items.size() != 2) type_error(key, "a point [x, y]");
  return {as_number(v.items[0], key), as_number(v.items[1], key)};
}

std::vector<Vec2> as_points(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::kList) type_error(key, "a list of points [[x, y], ...]");
  std::vector<Vec2> pts;
  for (const Value& item : v.items) pts.push_back(as_point(item, key));
  return pts;
}

struct MapSpec {
  std::optional<double> scale;
  double rotation = 0.0;
  bool reflect = false;
  std::optional<Vec2> translation;
};

}  // namespace

void validate_config(const RunConfig& c) {
  if (c.depth < 1) throw ConfigError("depth must be ≥ 1");
  if (c.depth > kMaxDepth) throw ConfigError("depth must be ≤ " + std::to_string(kMaxDepth));
  if (!(c.resolution >= 16.0)) throw ConfigError("resolution must be ≥ 16");
  if (c.samples_per_edge < 1) throw ConfigError("samples_per_edge must be ≥ 1");
  if (c.scales) {
    if (c.scales->empty()) throw ConfigError("scales must not be empty");
    for (double r : *c.scales) {
      if (!(r > 0.0)) throw ConfigError("scales must be positive");
    }
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::optional<std::string> preset;
  std::map<int, MapSpec> maps;
  std::optional<Polygon> seed;
  std::map<int, Polygon> carve;
  std::set<std::string> seen;

  static const std::regex kMapKey(R"(custom\.maps\[(\d+)\]\.(scale|rotation|reflect|translation))");
  static const std::regex kCarveKey(R"(custom\.carve\[(\d+)\])");

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stmt = trim(strip_comment(line));
    if (stmt.empty()) continue;
    while (bracket_balance(stmt) > 0 && std::getline(in, line)) {
      ++line_no;
      stmt += " " + trim(strip_comment(line));
    }
    const std::size_t eq = stmt.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(stmt).substr(0, eq));
    const Value v = ValueParser(std::string_view(stmt).substr(eq + 1), key).parse_document();
    if (!seen.insert(key).second) throw ConfigError("key '" + key + "' given twice");

    std::smatch m;
    if (key == "preset") {
      preset = as_string(v, key);
    } else if (key == "depth") {
      cfg.depth = as_int(v, key);
    } else if (key == "resolution") {
      cfg.resolution = as_number(v, key);
    } else if (key == "samples_per_edge") {
      cfg.samples_per_edge = as_int(v, key);
    } else if (key == "scales") {
      if (v.kind != Value::Kind::kList) type_error(key, "a list of numbers");
      std::vector<double> scales;
      for (const Value& item : v.items) scales.push_back(as_number(item, key));
      cfg.scales = std::move(scales);
    } else if (key == "metrics") {
      if (v.kind != Value::Kind::kList) type_error(key, "a list of analysis names");
      cfg.metrics.clear();
      for (const Value& item : v.items) {
        const std::string name = as_string(item, key);
        if (name == "all") {
          cfg.metrics = all_analyses();
          break;
        }
        const auto& all = all_analyses();
        auto it = std::find_if(all.begin(), all.end(), [&](Analysis a) { return analysis_name(a) == name; });
        if (it == all.end()) {
          std::string valid;
          for (Analysis a : all) valid += (valid.empty() ? "" : ", ") + std::string(analysis_name(a));
          throw ConfigError("key 'metrics': unknown analysis \"" + name + "\"; known: " + valid);
        }
        if (!cfg.wants(*it)) cfg.metrics.push_back(*it);
      }
    } else if (key == "points") {
      cfg.points = as_points(v, key);
    } else if (key == "out") {
      cfg.out = as_string(v, key);
    } else if (key == "svg") {
      cfg.svg = as_string(v, key);
    } else if (key == "timings") {
      cfg.timings = as_bool(v, key);
    } else if (key == "custom.seed") {
      seed = as_points(v, key);
    } else if (std::regex_match(key, m, kCarveKey)) {
      carve[std::stoi(m[1].str())] = as_points(v, key);
    } else if (std::regex_match(key, m, kMapKey)) {
      MapSpec& spec = maps[std::stoi(m[1].str())];
      const std::string field = m[2].str();
      if (field == "scale") spec.scale = as_number(v, key);
      if (field == "rotation") spec.rotation = as_number(v, key);
      if (field == "reflect") spec.reflect = as_bool(v, key);
      if (field == "translation") spec.translation = as_point(v, key);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  const bool custom = !maps.empty() || seed.has_value() || !carve.empty();
  if (preset && custom) throw ConfigError("key 'preset': cannot be combined with custom.* keys");
  if (preset) {
    cfg.system_name = *preset;
    cfg.system = build_preset(*preset);
  } else if (custom) {
    cfg.system_name = "custom";
    IfsSystem sys;
    int expect = 0;
    for (const auto& [idx, spec] : maps) {
      const std::string base = "custom.maps[" + std::to_string(idx) + "]";
      if (idx != expect++) throw ConfigError("key '" + base + "': map indices must be contiguous from 0");
      if (!spec.scale) throw ConfigError("key '" + base + ".scale': required");
      if (!spec.translation) throw ConfigError("key '" + base + ".translation': required");
      try {
        sys.maps.emplace_back(*spec.scale, spec.rotation, spec.reflect, *spec.translation);
      } catch (const ConfigError& e) {
        throw ConfigError("key '" + base + ".scale': " + e.what());
      }
    }
    if (!seed) throw ConfigError("key 'custom.seed': required for a custom system");
    sys.seed = *seed;
    expect = 0;
    for (auto& [idx, poly] : carve) {
      if (idx != expect++) throw ConfigError("key 'custom.carve': indices must be contiguous from 0");
      sys.carve.push_back(std::move(poly));
    }
    cfg.system = validate_system(std::move(sys));
  } else {
    throw ConfigError("key 'preset': required (or a custom.* system definition)");
  }
  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace compss

// Copyright 2026 The uvbot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uvbot/disinfection/target.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "common/yaml_util.h"
#include "disinfection/target_yaml.h"
#include "uvbot/common/error.h"

namespace uvbot {

void DisinfectionTarget::Validate() const {
  if (cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "disinfection target has no cells");
  }
  if (!(required_dose > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "required dose must be positive");
  }
}

double RequiredDoseForLogReduction(double logs, double d90) {
  if (!(d90 > 0.0) || !(logs > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need log_reduction > 0 and d90 > 0");
  }
  return logs * d90;
}

std::vector<CellIndex> CellsInPolygon(const OccupancyGrid& grid, std::span<const Point2> polygon) {
  std::vector<CellIndex> out;
  if (polygon.size() < 3) return out;
  for (int row = 0; row < grid.height(); ++row) {
    for (int col = 0; col < grid.width(); ++col) {
      const Point2 p = grid.CellCenter({col, row});
      bool inside = false;
      for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        const Point2 a = polygon[i];
        const Point2 b = polygon[j];
        if ((a.y > p.y) != (b.y > p.y) &&
            p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
          inside = !inside;
        }
      }
      if (inside) out.push_back({col, row});
    }
  }
  return out;
}

namespace internal {

DisinfectionTarget TargetFromNode(const YAML::Node& node, const OccupancyGrid& grid) {
  if (!node.IsMap()) yaml::Fail(node, "target must be a mapping");
  DisinfectionTarget target;
  if (node["required_dose"]) {
    target.required_dose = yaml::Require<double>(node, "required_dose");
  } else if (node["log_reduction"]) {
    try {
      target.required_dose = RequiredDoseForLogReduction(
          yaml::Require<double>(node, "log_reduction"), yaml::Require<double>(node, "d90"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConfigError) throw;
      yaml::Fail(node, e.what());
    }
  } else {
    yaml::Fail(node, "target needs 'required_dose' or 'log_reduction' with 'd90'");
  }
  if (!(target.required_dose > 0.0)) yaml::Fail(node, "required dose must be positive");

  if (const YAML::Node points = node["points"]) {
    if (!points.IsSequence()) yaml::Fail(points, "'points' must be a list");
    for (const auto& p : points) {
      const Point2 pt = yaml::ParsePoint(p, "points");
      const auto cell = grid.WorldToCell(pt);
      if (!cell) {
        throw Error(ErrorCode::kOutOfBounds,
                    "line " + std::to_string(p.Mark().line + 1) + ": target point off the map");
      }
      target.cells.push_back(*cell);
    }
  }
  if (const YAML::Node polygons = node["polygons"]) {
    if (!polygons.IsSequence()) yaml::Fail(polygons, "'polygons' must be a list");
    for (const auto& poly : polygons) {
      if (!poly.IsSequence() || poly.size() < 3) {
        yaml::Fail(poly, "each polygon needs at least three [x, y] vertices");
      }
      std::vector<Point2> vertices;
      for (const auto& v : poly) vertices.push_back(yaml::ParsePoint(v, "polygons"));
      const auto cells = CellsInPolygon(grid, vertices);
      target.cells.insert(target.cells.end(), cells.begin(), cells.end());
    }
  }
  std::sort(target.cells.begin(), target.cells.end(),
            [](CellIndex a, CellIndex b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  target.cells.erase(std::unique(target.cells.begin(), target.cells.end()), target.cells.end());
  return target;
}

}  // namespace internal

DisinfectionTarget ParseTarget(const std::string& yaml_text, const OccupancyGrid& grid) {
  return internal::TargetFromNode(yaml::Parse(yaml_text), grid);
}

DisinfectionTarget LoadTarget(const std::filesystem::path& path, const OccupancyGrid& grid) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTarget(buffer.str(), grid);
}

}  // namespace uvbot

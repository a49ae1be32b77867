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

// Private helpers for reading YAML configuration with line-numbered errors.

#ifndef UVBOT_COMMON_YAML_UTIL_H_
#define UVBOT_COMMON_YAML_UTIL_H_

#include <string>

#include <yaml-cpp/yaml.h>

#include "uvbot/common/error.h"
#include "uvbot/world/pose.h"

namespace uvbot::yaml {

[[noreturn]] inline void Fail(const YAML::Node& node, const std::string& message) {
  const YAML::Mark mark = node.Mark();
  if (mark.line >= 0) {
    throw Error(ErrorCode::kConfigError,
                "line " + std::to_string(mark.line + 1) + ": " + message);
  }
  throw Error(ErrorCode::kConfigError, message);
}

inline YAML::Node Parse(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kConfigError,
                "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
}

template <typename T>
T As(const YAML::Node& node, const std::string& what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    Fail(node, "bad value for '" + what + "'");
  }
}

template <typename T>
T Get(const YAML::Node& parent, const std::string& key, T fallback) {
  const YAML::Node node = parent[key];
  if (!node) return fallback;
  return As<T>(node, key);
}

template <typename T>
T Require(const YAML::Node& parent, const std::string& key) {
  const YAML::Node node = parent[key];
  if (!node) Fail(parent, "missing '" + key + "'");
  return As<T>(node, key);
}

// [x, y] or {x: .., y: ..}.
inline Point2 ParsePoint(const YAML::Node& node, const std::string& what) {
  if (node.IsSequence() && node.size() == 2) {
    return {As<double>(node[0], what), As<double>(node[1], what)};
  }
  if (node.IsMap()) {
    return {Require<double>(node, "x"), Require<double>(node, "y")};
  }
  Fail(node, "'" + what + "' must be [x, y] or {x, y}");
}

}  // namespace uvbot::yaml

#endif  // UVBOT_COMMON_YAML_UTIL_H_

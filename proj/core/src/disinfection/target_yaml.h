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

#ifndef UVBOT_DISINFECTION_TARGET_YAML_H_
#define UVBOT_DISINFECTION_TARGET_YAML_H_

#include <yaml-cpp/yaml.h>

#include "uvbot/disinfection/target.h"

namespace uvbot::internal {

DisinfectionTarget TargetFromNode(const YAML::Node& node, const OccupancyGrid& grid);

}  // namespace uvbot::internal

#endif  // UVBOT_DISINFECTION_TARGET_YAML_H_

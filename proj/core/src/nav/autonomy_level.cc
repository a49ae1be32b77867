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

#include "uvbot/nav/autonomy_level.h"

namespace uvbot {

std::string_view AutonomyLevelName(AutonomyLevel level) {
  switch (level) {
    case AutonomyLevel::kManual: return "Manual";
    case AutonomyLevel::kAssistedDecel: return "AssistedDecel";
    case AutonomyLevel::kAssistedSteer: return "AssistedSteer";
    case AutonomyLevel::kAutonomous: return "Autonomous";
  }
  return "Manual";
}

std::optional<AutonomyLevel> ParseAutonomyLevel(std::string_view name) {
  for (const auto level : {AutonomyLevel::kManual, AutonomyLevel::kAssistedDecel,
                           AutonomyLevel::kAssistedSteer, AutonomyLevel::kAutonomous}) {
    if (AutonomyLevelName(level) == name) return level;
  }
  return std::nullopt;
}

}  // namespace uvbot

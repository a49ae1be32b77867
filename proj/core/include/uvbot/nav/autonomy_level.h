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

#ifndef UVBOT_NAV_AUTONOMY_LEVEL_H_
#define UVBOT_NAV_AUTONOMY_LEVEL_H_

#include <optional>
#include <string_view>

namespace uvbot {

// AssistedSteer includes the deceleration behaviour of AssistedDecel.
enum class AutonomyLevel { kManual, kAssistedDecel, kAssistedSteer, kAutonomous };

std::string_view AutonomyLevelName(AutonomyLevel level);
std::optional<AutonomyLevel> ParseAutonomyLevel(std::string_view name);

inline bool IsAssisted(AutonomyLevel level) {
  return level == AutonomyLevel::kAssistedDecel ||
         level == AutonomyLevel::kAssistedSteer;
}

}  // namespace uvbot

#endif  // UVBOT_NAV_AUTONOMY_LEVEL_H_

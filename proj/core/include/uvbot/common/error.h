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

#ifndef UVBOT_COMMON_ERROR_H_
#define UVBOT_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace uvbot {

// Every failure surfaced by the library carries one of these codes so callers
// (the CLI, the relay, the console) can branch on the kind of failure rather
// than on message text.
enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  // Map ingestion.
  kMalformedHeader,
  kDimensionMismatch,
  kNonPositiveResolution,
  kMalformedMetadata,
  // Geometry.
  kOutOfBounds,
  kInsideObstacle,
  // Navigation.
  kStartOccupied,
  kGoalOccupied,
  kGoalUnreachable,
  kTargetOutOfRange,
  kPathBlocked,
  // Disinfection planning.
  kNoReachablePose,
  // Protocol.
  kDuplicateId,
  kInvalidId,
  kUnknownRobot,
  kRobotBusy,
  kUnknownTopic,
  kWrongDirection,
  kSessionClosed,
  kSessionDegraded,
  kBadSequence,
  kBadMessage,
  kBadPayload,
  // Scenario runner.
  kConfigError,
  kCollision,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace uvbot

#endif  // UVBOT_COMMON_ERROR_H_

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

#include "uvbot/common/error.h"

namespace uvbot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonPositiveResolution: return "NonPositiveResolution";
    case ErrorCode::kMalformedMetadata: return "MalformedMetadata";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kInsideObstacle: return "InsideObstacle";
    case ErrorCode::kStartOccupied: return "StartOccupied";
    case ErrorCode::kGoalOccupied: return "GoalOccupied";
    case ErrorCode::kGoalUnreachable: return "GoalUnreachable";
    case ErrorCode::kTargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::kPathBlocked: return "PathBlocked";
    case ErrorCode::kNoReachablePose: return "NoReachablePose";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kUnknownRobot: return "UnknownRobot";
    case ErrorCode::kRobotBusy: return "RobotBusy";
    case ErrorCode::kUnknownTopic: return "UnknownTopic";
    case ErrorCode::kWrongDirection: return "WrongDirection";
    case ErrorCode::kSessionClosed: return "SessionClosed";
    case ErrorCode::kSessionDegraded: return "SessionDegraded";
    case ErrorCode::kBadSequence: return "BadSequence";
    case ErrorCode::kBadMessage: return "BadMessage";
    case ErrorCode::kBadPayload: return "BadPayload";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kCollision: return "Collision";
  }
  return "Unknown";
}

}  // namespace uvbot

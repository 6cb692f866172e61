// Copyright 2026 The Pointer Suite Authors
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

#include "pointer_suite/error.h"

namespace pointer_suite {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedToken:
      return "MalformedToken";
    case ErrorCode::kMalformedRecord:
      return "MalformedRecord";
    case ErrorCode::kIoFailure:
      return "IoFailure";
    case ErrorCode::kUnsupportedTask:
      return "UnsupportedTask";
    case ErrorCode::kConfigInfeasible:
      return "ConfigInfeasible";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kAmbiguousMatch:
      return "AmbiguousMatch";
    case ErrorCode::kMissingNeighbor:
      return "MissingNeighbor";
    case ErrorCode::kStartNotFound:
      return "StartNotFound";
    case ErrorCode::kInstanceTooLarge:
      return "InstanceTooLarge";
    case ErrorCode::kNoAnswerLine:
      return "NoAnswerLine";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kUnsupportedCombination:
      return "UnsupportedCombination";
  }
  return "Unknown";
}

}  // namespace pointer_suite

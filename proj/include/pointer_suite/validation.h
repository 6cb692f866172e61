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

#ifndef POINTER_SUITE_VALIDATION_H_
#define POINTER_SUITE_VALIDATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace pointer_suite {

enum class ViolationKind {
  kMalformedInput,
  kDuplicateToken,
  kAlternation,
  kTooShort,
  kAmbiguousMatch,
  kMatchCycle,
  kMissingNeighbor,
  kYellowChainBroken,
  kMissingDoppelganger,
  kExtraPrefixSharer,
  kDoppelgangerMisplaced,
  kTerminalYellowMatched,
  kFreeChainBroken,
  kStartNotFound,
  kTerminalReachable,
  kTargetMismatch,
  kOutOfRange,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

using Violations = std::vector<Violation>;

bool HasViolation(const Violations& violations, ViolationKind kind);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_VALIDATION_H_

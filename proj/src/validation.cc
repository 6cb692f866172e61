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

#include "pointer_suite/validation.h"

#include <algorithm>

namespace pointer_suite {

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMalformedInput:
      return "malformed_input";
    case ViolationKind::kDuplicateToken:
      return "duplicate_token";
    case ViolationKind::kAlternation:
      return "alternation";
    case ViolationKind::kTooShort:
      return "too_short";
    case ViolationKind::kAmbiguousMatch:
      return "ambiguous_match";
    case ViolationKind::kMatchCycle:
      return "match_cycle";
    case ViolationKind::kMissingNeighbor:
      return "missing_neighbor";
    case ViolationKind::kYellowChainBroken:
      return "yellow_chain_broken";
    case ViolationKind::kMissingDoppelganger:
      return "missing_doppelganger";
    case ViolationKind::kExtraPrefixSharer:
      return "extra_prefix_sharer";
    case ViolationKind::kDoppelgangerMisplaced:
      return "doppelganger_misplaced";
    case ViolationKind::kTerminalYellowMatched:
      return "terminal_yellow_matched";
    case ViolationKind::kFreeChainBroken:
      return "free_chain_broken";
    case ViolationKind::kStartNotFound:
      return "start_not_found";
    case ViolationKind::kTerminalReachable:
      return "terminal_reachable";
    case ViolationKind::kTargetMismatch:
      return "target_mismatch";
    case ViolationKind::kOutOfRange:
      return "out_of_range";
  }
  return "unknown";
}

bool HasViolation(const Violations& violations, ViolationKind kind) {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace pointer_suite

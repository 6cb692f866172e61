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

#include "pointer_suite/sample.h"

#include <algorithm>
#include <cctype>
#include <string>

namespace pointer_suite {

std::string_view TaskName(TaskId task) {
  switch (task) {
    case TaskId::kPen:
      return "PEN";
    case TaskId::kPe:
      return "PE";
    case TaskId::kPev:
      return "PEV";
    case TaskId::kCpy:
      return "CPY";
    case TaskId::kRcpy:
      return "RCPY";
    case TaskId::kPerm:
      return "PERM";
    case TaskId::kPer:
      return "PER";
    case TaskId::kPem:
      return "PEM";
    case TaskId::kHss:
      return "HSS";
    case TaskId::kSse:
      return "SSE";
    case TaskId::kMul:
      return "MUL";
    case TaskId::kDmul:
      return "DMUL";
    case TaskId::kAdd:
      return "ADD";
  }
  return "?";
}

std::optional<TaskId> ParseTaskName(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (TaskId task : kAllTasks) {
    if (TaskName(task) == upper) return task;
  }
  return std::nullopt;
}

}  // namespace pointer_suite

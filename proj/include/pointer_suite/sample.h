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

#ifndef POINTER_SUITE_SAMPLE_H_
#define POINTER_SUITE_SAMPLE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace pointer_suite {

enum class TaskId {
  kPen,
  kPe,
  kPev,
  kCpy,
  kRcpy,
  kPerm,
  kPer,
  kPem,
  kHss,
  kSse,
  kMul,
  kDmul,
  kAdd,
};

inline constexpr std::array<TaskId, 13> kAllTasks = {
    TaskId::kPen,  TaskId::kPe,  TaskId::kPev, TaskId::kCpy, TaskId::kRcpy,
    TaskId::kPerm, TaskId::kPer, TaskId::kPem, TaskId::kHss, TaskId::kSse,
    TaskId::kMul,  TaskId::kDmul, TaskId::kAdd,
};

// Canonical upper-case identifier ("PEN", "RCPY", ...).
std::string_view TaskName(TaskId task);
// Case-insensitive.
std::optional<TaskId> ParseTaskName(std::string_view name);

struct Sample {
  TaskId task = TaskId::kPen;
  std::string input;
  std::string target;
  // Generation metadata (seed, structural parameters). Keys are sorted on
  // serialization so records stay byte-stable.
  nlohmann::json meta = nlohmann::json::object();

  bool operator==(const Sample& other) const = default;
};

}  // namespace pointer_suite

#endif  // POINTER_SUITE_SAMPLE_H_

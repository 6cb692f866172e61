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

#ifndef POINTER_SUITE_TASKS_H_
#define POINTER_SUITE_TASKS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pointer_suite/numeric.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/perm.h"
#include "pointer_suite/sample.h"
#include "pointer_suite/validation.h"

namespace pointer_suite {

// Every generator configuration in one place, so a single seed and a single
// config file describe a whole dataset.
struct SuiteConfig {
  PenConfig pen;
  CopyConfig copy;
  PermConfig perm;
  HssConfig hss;
  MulConfig mul;
  // Word list backing natural mode, empty for the synthetic vocabulary.
  // Kept so the manifest can echo it.
  std::string vocab_path;
};

// Task-dispatched oracle over the raw input text. Throws the oracle's own
// errors (kAmbiguousMatch, kStartNotFound, kMalformedRecord, ...).
std::string OracleTarget(TaskId task, std::string_view input);

// Oracle agreement plus the structural validator of the task family. Any
// oracle exception is reported as a violation rather than thrown.
Violations ValidateSample(const Sample& sample);

Sample Generate(TaskId task, const SuiteConfig& config, uint64_t seed);

// Seed of sample `index` of `task` under a master seed. Each task owns an
// independent stream, so adding a task to a mix never shifts another's data.
uint64_t SampleSeed(uint64_t master, TaskId task, uint64_t index);

// Samples [first, first + count) of a task stream, in index order.
std::vector<Sample> GenerateSerial(TaskId task, const SuiteConfig& config,
                                   uint64_t master, uint64_t first,
                                   std::size_t count);
// Same output as GenerateSerial, computed with OpenMP.
std::vector<Sample> GenerateParallel(TaskId task, const SuiteConfig& config,
                                     uint64_t master, uint64_t first,
                                     std::size_t count);

struct MixEntry {
  TaskId task;
  std::size_t count;
  bool operator==(const MixEntry&) const = default;
};

// "pen=5,cpy=2". Throws Error(kUnsupportedTask) for unknown task names and
// Error(kInvalidConfig) for malformed entries or repeated tasks.
std::vector<MixEntry> ParseMixSpec(std::string_view spec);
std::string RenderMixSpec(std::span<const MixEntry> mix);

// Concatenates each entry's stream, then shuffles under the master seed.
std::vector<Sample> GenerateMix(std::span<const MixEntry> mix,
                                const SuiteConfig& config, uint64_t master,
                                bool parallel);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_TASKS_H_

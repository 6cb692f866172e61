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

#include "pointer_suite/tasks.h"

#include <omp.h>

#include <exception>
#include <set>
#include <string>

#include "pointer_suite/error.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {
namespace {

// Stream ids are spaced away from small sample indices on purpose.
constexpr uint64_t kTaskStreamBase = 0x7a5c0000;
constexpr uint64_t kMixShuffleStream = 0x6d69780000ULL;

std::string RenderDecimals(const Decimal& d) { return d.ToString(); }

bool IsPenFamily(TaskId task) {
  return task == TaskId::kPen || task == TaskId::kPe || task == TaskId::kPev;
}

bool IsPermFamily(TaskId task) {
  return task == TaskId::kPerm || task == TaskId::kPer || task == TaskId::kPem;
}

void AppendAll(Violations& into, Violations from) {
  for (Violation& v : from) into.push_back(std::move(v));
}

Violations StructuralChecks(const Sample& sample) {
  const TaskId task = sample.task;
  if (IsPenFamily(task)) {
    bool traps = true;
    if (sample.meta.is_object() && sample.meta.contains("traps")) {
      traps = sample.meta["traps"].get<bool>();
    }
    return ValidatePen(Seq::Parse(sample.input), traps);
  }
  if (IsPermFamily(task)) {
    const PermInput in = ParsePermInput(sample.input);
    const int tokens = static_cast<int>(SplitTokens(sample.target).size());
    return ValidatePerm(in.seq, in.start, tokens - 1);
  }
  if (task == TaskId::kCpy || task == TaskId::kRcpy) {
    const Seq seq = Seq::Parse(sample.input);
    if (!seq.AllDistinct()) {
      return {{ViolationKind::kDuplicateToken, "copy input repeats a word"}};
    }
    return {};
  }
  if (task == TaskId::kDmul) {
    const std::vector<Decimal> ops = ParseInfix(sample.input, '*');
    if (ops.size() != 2 || ops[1].num_digits() != 1) {
      return {{ViolationKind::kOutOfRange,
               "DMUL needs exactly one single-digit multiplier"}};
    }
  }
  if (task == TaskId::kMul && ParseInfix(sample.input, '*').size() != 2) {
    return {{ViolationKind::kOutOfRange, "MUL needs exactly two operands"}};
  }
  return {};
}

}  // namespace

std::string OracleTarget(TaskId task, std::string_view input) {
  switch (task) {
    case TaskId::kPen:
      return JoinTokens(OraclePen(Seq::Parse(input)));
    case TaskId::kPe:
      return JoinTokens(OraclePe(Seq::Parse(input)));
    case TaskId::kPev:
      return JoinTokens(OraclePev(Seq::Parse(input)));
    case TaskId::kCpy:
      return JoinTokens(OracleCpy(Seq::Parse(input)));
    case TaskId::kRcpy:
      return JoinTokens(OracleRcpy(Seq::Parse(input)));
    case TaskId::kPerm: {
      const PermInput in = ParsePermInput(input);
      return JoinTokens(OraclePerm(in.seq, in.start));
    }
    case TaskId::kPer: {
      const PermInput in = ParsePermInput(input);
      return JoinTokens(OraclePer(in.seq, in.start));
    }
    case TaskId::kPem: {
      const PermInput in = ParsePermInput(input);
      return JoinTokens(OraclePem(in.seq, in.start));
    }
    case TaskId::kHss:
      return std::to_string(OracleHss(ParseNumberList(input)));
    case TaskId::kSse:
      return OracleSse(ParseNumberList(input));
    case TaskId::kMul: {
      const std::vector<Decimal> ops = ParseInfix(input, '*');
      if (ops.size() != 2) {
        throw Error(ErrorCode::kMalformedRecord, "MUL takes two operands");
      }
      return RenderDecimals(OracleMul(ops[0], ops[1]));
    }
    case TaskId::kDmul: {
      const std::vector<Decimal> ops = ParseInfix(input, '*');
      if (ops.size() != 2 || ops[1].num_digits() != 1) {
        throw Error(ErrorCode::kMalformedRecord,
                    "DMUL takes a number and one digit");
      }
      return RenderDecimals(OracleDmul(ops[0], ops[1].digit(0)));
    }
    case TaskId::kAdd:
      return RenderDecimals(OracleAdd(ParseInfix(input, '+')));
  }
  throw Error(ErrorCode::kUnsupportedTask, "unknown task");
}

Violations ValidateSample(const Sample& sample) {
  Violations out;
  try {
    const std::string expected = OracleTarget(sample.task, sample.input);
    if (expected != sample.target) {
      out.push_back({ViolationKind::kTargetMismatch,
                     "oracle gives '" + expected + "'"});
    }
    AppendAll(out, StructuralChecks(sample));
  } catch (const Error& e) {
    const ViolationKind kind = e.code() == ErrorCode::kAmbiguousMatch
                                   ? ViolationKind::kAmbiguousMatch
                               : e.code() == ErrorCode::kStartNotFound
                                   ? ViolationKind::kStartNotFound
                                   : ViolationKind::kMalformedInput;
    out.push_back({kind, e.message()});
  }
  return out;
}

Sample Generate(TaskId task, const SuiteConfig& config, uint64_t seed) {
  switch (task) {
    case TaskId::kPen:
      return GenPen(config.pen, seed);
    case TaskId::kPe:
      return GenPe(config.pen, seed);
    case TaskId::kPev:
      return GenPev(config.pen, seed);
    case TaskId::kCpy:
      return GenCpy(config.copy, seed);
    case TaskId::kRcpy:
      return GenRcpy(config.copy, seed);
    case TaskId::kPerm:
      return GenPerm(config.perm, seed);
    case TaskId::kPer:
      return GenPer(config.perm, seed);
    case TaskId::kPem:
      return GenPem(config.perm, seed);
    case TaskId::kHss:
      return GenHss(config.hss, seed);
    case TaskId::kSse:
      return GenSse(config.hss, seed);
    case TaskId::kMul:
      return GenMul(config.mul, seed);
    case TaskId::kDmul:
      return GenDmul(config.mul, seed);
    case TaskId::kAdd:
      return GenAdd(config.mul, seed);
  }
  throw Error(ErrorCode::kUnsupportedTask, "unknown task");
}

uint64_t SampleSeed(uint64_t master, TaskId task, uint64_t index) {
  const uint64_t stream =
      DeriveSeed(master, kTaskStreamBase + static_cast<uint64_t>(task));
  return DeriveSeed(stream, index);
}

std::vector<Sample> GenerateSerial(TaskId task, const SuiteConfig& config,
                                   uint64_t master, uint64_t first,
                                   std::size_t count) {
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(Generate(task, config, SampleSeed(master, task, first + i)));
  }
  return out;
}

std::vector<Sample> GenerateParallel(TaskId task, const SuiteConfig& config,
                                     uint64_t master, uint64_t first,
                                     std::size_t count) {
  std::vector<Sample> out(count);
  // Exceptions may not cross the parallel region, so the first one (by
  // index) is parked and rethrown afterwards.
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t i = 0; i < n; ++i) {
    try {
      out[i] = Generate(task, config,
                        SampleSeed(master, task, first + static_cast<uint64_t>(i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<MixEntry> ParseMixSpec(std::string_view spec) {
  std::vector<MixEntry> out;
  std::set<TaskId> seen;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    std::size_t end = spec.find(',', begin);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view item = spec.substr(begin, end - begin);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "mix entry '" + std::string(item) + "' is not task=count");
    }
    const std::optional<TaskId> task = ParseTaskName(item.substr(0, eq));
    if (!task) {
      throw Error(ErrorCode::kUnsupportedTask,
                  "unknown task '" + std::string(item.substr(0, eq)) + "'");
    }
    const std::string count_text(item.substr(eq + 1));
    if (count_text.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "mix count '" + count_text + "' is not a number");
    }
    if (!seen.insert(*task).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "task '" + std::string(TaskName(*task)) + "' repeated in mix");
    }
    out.push_back({*task, std::stoull(count_text)});
    begin = end + 1;
  }
  return out;
}

std::string RenderMixSpec(std::span<const MixEntry> mix) {
  std::string out;
  for (const MixEntry& e : mix) {
    if (!out.empty()) out += ',';
    out += TaskName(e.task);
    out += '=';
    out += std::to_string(e.count);
  }
  return out;
}

std::vector<Sample> GenerateMix(std::span<const MixEntry> mix,
                                const SuiteConfig& config, uint64_t master,
                                bool parallel) {
  std::vector<Sample> out;
  for (const MixEntry& e : mix) {
    std::vector<Sample> part =
        parallel ? GenerateParallel(e.task, config, master, 0, e.count)
                 : GenerateSerial(e.task, config, master, 0, e.count);
    for (Sample& s : part) out.push_back(std::move(s));
  }
  Rng rng(DeriveSeed(master, kMixShuffleStream));
  rng.Shuffle(std::span<Sample>(out));
  return out;
}

}  // namespace pointer_suite

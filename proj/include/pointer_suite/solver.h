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

#ifndef POINTER_SUITE_SOLVER_H_
#define POINTER_SUITE_SOLVER_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pointer_suite/sample.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {

// What the last action produced. BOS only ever fills the initial history.
enum class Outcome : uint8_t {
  kEos,
  kLastOutput,
  kMatch,
  kLeft,
  kRight,
  kIsStartTrue,
  kIsStartFalse,
  kIsErrorTrue,
  kIsErrorFalse,
  kOutput,
  kBos,
};
inline constexpr int kNumOutcomes = 11;

enum class Action : uint8_t {
  kEos,
  kLastOutput,
  kMatch,
  kLeft,
  kRight,
  kIsStart,
  kIsError,
  kOutput,
};
inline constexpr int kNumActions = 8;
inline constexpr int kTableSize = kNumOutcomes * kNumOutcomes;

std::string_view OutcomeName(Outcome o);
std::string_view ActionName(Action a);
std::optional<Outcome> ParseOutcome(std::string_view name);
std::optional<Action> ParseAction(std::string_view name);

// The machine's whole program: the next action for each pair of the two
// most recent outcomes. Default-constructed tables halt immediately.
class ProgramTable {
 public:
  ProgramTable() { entries_.fill(Action::kEos); }

  static constexpr int Index(Outcome prev, Outcome last) {
    return static_cast<int>(prev) * kNumOutcomes + static_cast<int>(last);
  }
  Action at(Outcome prev, Outcome last) const {
    return entries_[Index(prev, last)];
  }
  void set(Outcome prev, Outcome last, Action a) {
    entries_[Index(prev, last)] = a;
  }
  Action at(int index) const { return entries_[index]; }
  void set(int index, Action a) { entries_[index] = a; }

  // {"PREV,LAST": "ACTION", ...} over all 121 pairs.
  nlohmann::ordered_json ToJson() const;
  // Throws Error(kMalformedRecord) unless every pair is present exactly once.
  static ProgramTable FromJson(const nlohmann::json& j);

  bool operator==(const ProgramTable&) const = default;

 private:
  std::array<Action, kTableSize> entries_;
};

struct MachineLimits {
  static constexpr int kMaxActionsPerPass = 12;
  // Defaults to twice the input length.
  std::optional<std::size_t> max_output_words;
};

struct TraceStep {
  int pass;
  Action action;
  Outcome outcome;
  std::string current;  // "ERROR" when unset
};

enum class Halt { kEos, kErrorOutput, kActionLimit, kOutputLimit };
std::string_view HaltName(Halt h);

struct RunResult {
  std::vector<std::string> answer;
  std::vector<TraceStep> trace;
  Halt halt = Halt::kEos;
  int max_actions_in_pass = 0;
};

// Executes passes until a halt. Each pass starts from history (BOS, BOS)
// with the current word set to ERROR and ends on OUTPUT.
RunResult RunProgram(const ProgramTable& table, const Seq& input,
                     const MachineLimits& limits = {},
                     bool record_trace = false);
// One line per action.
std::string FormatTrace(const RunResult& result);

// Hand-written left-match-right program.
ProgramTable ReferenceProgram();

// Positional agreement with the gold answer; `perfect` additionally needs
// equal length. Ordered by matches first.
struct Fitness {
  int matches = 0;
  bool perfect = false;
  auto operator<=>(const Fitness&) const = default;
};

Fitness ComputeFitness(std::span<const std::string> generated,
                       std::span<const std::string> gold);
Fitness ProgramFitness(const ProgramTable& table, const Sample& sample);

struct SearchConfig {
  int restarts = 200;
  int steps = 5000;
  bool accept_equal = true;
  // Parameter i is picked with weight 1 / (1 + penalty * accepted_i).
  double penalty = 1.0;
  // Extra steps after the first perfect table, spent minimizing the actions
  // executed on the training sample. 0 stops at the first perfect table.
  int polish_steps = 2000;
  // Throws Error(kInvalidConfig).
  void Validate() const;
};

struct SearchStats {
  bool perfect = false;
  Fitness best;
  int best_restart = 0;
  int restarts_used = 0;
  int64_t total_steps = 0;
  // Machine actions the returned table executes on the training sample.
  int train_actions = 0;
  // (step, fitness.matches) at every strict improvement of the winning
  // restart, starting with its random initial table at step 0.
  std::vector<std::pair<int, int>> trajectory;

  nlohmann::ordered_json ToJson() const;
};

struct SearchResult {
  ProgramTable table;
  SearchStats stats;
};

// One restart from a random table. Pure in (sample, config, seed).
SearchResult HillClimbOnce(const Sample& sample, const SearchConfig& config,
                           uint64_t seed);

// Restart r runs with DeriveSeed(seed, r). The first perfect restart wins;
// without one, the best fitness wins with ties going to the lower index.
SearchResult HillClimb(const Sample& sample, const SearchConfig& config,
                       uint64_t seed);
// Same result as HillClimb; restarts run concurrently in chunks.
SearchResult HillClimbParallel(const Sample& sample,
                               const SearchConfig& config, uint64_t seed);

// Fraction of samples whose generated answer equals the target exactly.
double ProgramAccuracy(const ProgramTable& table,
                       std::span<const Sample> samples);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_SOLVER_H_

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

#include "pointer_suite/solver.h"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "pointer_suite/error.h"
#include "pointer_suite/rng.h"

namespace pointer_suite {
namespace {

constexpr int kError = -1;

constexpr std::array<std::string_view, kNumOutcomes> kOutcomeNames = {
    "EOS",           "LAST_OUTPUT",    "MATCH",          "LEFT",
    "RIGHT",         "IS_START_TRUE",  "IS_START_FALSE", "IS_ERROR_TRUE",
    "IS_ERROR_FALSE", "OUTPUT",        "BOS",
};

constexpr std::array<std::string_view, kNumActions> kActionNames = {
    "EOS",   "LAST_OUTPUT", "MATCH",    "LEFT",
    "RIGHT", "IS_START",    "IS_ERROR", "OUTPUT",
};

// The input reduced to index arrays: neighbors, and the leftmost match of
// each position (kError when there is none).
struct CompiledInput {
  std::vector<int> left;
  std::vector<int> right;
  std::vector<int> match;
  int start = kError;
  std::size_t max_output = 0;
};

CompiledInput Compile(const Seq& seq, const MachineLimits& limits) {
  CompiledInput c;
  const int n = static_cast<int>(seq.size());
  c.left.resize(n);
  c.right.resize(n);
  c.match.resize(n);
  for (int p = 0; p < n; ++p) {
    c.left[p] = p > 0 ? p - 1 : kError;
    c.right[p] = p + 1 < n ? p + 1 : kError;
    const std::vector<std::size_t> m = seq.FindMatches(p);
    c.match[p] = m.empty() ? kError : static_cast<int>(m.front());
  }
  c.start = n > 0 ? 0 : kError;
  c.max_output = limits.max_output_words.value_or(2 * seq.size());
  return c;
}

struct RawRun {
  std::vector<int> emitted;
  Halt halt = Halt::kEos;
  int max_actions_in_pass = 0;
  int actions = 0;
};

// The machine proper. `trace` is filled when non-null.
RawRun Execute(const ProgramTable& table, const CompiledInput& in,
               const Seq* seq, std::vector<TraceStep>* trace) {
  RawRun run;
  for (int pass = 1;; ++pass) {
    if (run.emitted.size() >= in.max_output) {
      run.halt = Halt::kOutputLimit;
      return run;
    }
    Outcome prev = Outcome::kBos;
    Outcome last = Outcome::kBos;
    int current = kError;
    bool emitted_this_pass = false;
    for (int step = 0; step < MachineLimits::kMaxActionsPerPass; ++step) {
      const Action action = table.at(prev, last);
      Outcome outcome = Outcome::kEos;
      bool halt = false;
      switch (action) {
        case Action::kEos:
          outcome = Outcome::kEos;
          run.halt = Halt::kEos;
          halt = true;
          break;
        case Action::kLastOutput:
          current = run.emitted.empty() ? in.start : run.emitted.back();
          outcome = Outcome::kLastOutput;
          break;
        case Action::kMatch:
          current = current == kError ? kError : in.match[current];
          outcome = Outcome::kMatch;
          break;
        case Action::kLeft:
          current = current == kError ? kError : in.left[current];
          outcome = Outcome::kLeft;
          break;
        case Action::kRight:
          current = current == kError ? kError : in.right[current];
          outcome = Outcome::kRight;
          break;
        case Action::kIsStart:
          outcome = run.emitted.empty() ? Outcome::kIsStartTrue
                                        : Outcome::kIsStartFalse;
          break;
        case Action::kIsError:
          outcome = current == kError ? Outcome::kIsErrorTrue
                                      : Outcome::kIsErrorFalse;
          break;
        case Action::kOutput:
          outcome = Outcome::kOutput;
          if (current == kError) {
            run.halt = Halt::kErrorOutput;
            halt = true;
          } else {
            run.emitted.push_back(current);
            emitted_this_pass = true;
          }
          break;
      }
      run.max_actions_in_pass = std::max(run.max_actions_in_pass, step + 1);
      ++run.actions;
      if (trace != nullptr) {
        trace->push_back({pass, action, outcome,
                          current == kError ? std::string("ERROR")
                                            : seq->token(current)});
      }
      if (halt) return run;
      if (emitted_this_pass) break;
      prev = last;
      last = outcome;
    }
    if (!emitted_this_pass) {
      run.halt = Halt::kActionLimit;
      return run;
    }
  }
}

// Gold tokens as input positions, -2 for tokens the input lacks.
std::vector<int> GoldPositions(const Seq& seq,
                               std::span<const std::string> gold) {
  std::vector<int> out;
  out.reserve(gold.size());
  for (const std::string& t : gold) {
    const auto p = seq.Position(t);
    out.push_back(p ? static_cast<int>(*p) : -2);
  }
  return out;
}

Fitness PositionalFitness(const std::vector<int>& generated,
                          const std::vector<int>& gold) {
  Fitness f;
  const std::size_t n = std::min(generated.size(), gold.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (generated[i] == gold[i]) ++f.matches;
  }
  f.perfect = generated.size() == gold.size() &&
              f.matches == static_cast<int>(gold.size());
  return f;
}

// Everything a restart needs about its training sample, built once.
struct TrainingSample {
  Seq seq;
  CompiledInput input;
  std::vector<int> gold;
};

TrainingSample Prepare(const Sample& sample) {
  if (sample.task != TaskId::kPen) {
    throw Error(ErrorCode::kUnsupportedCombination,
                "the solver learns PEN samples only");
  }
  TrainingSample t{Seq::Parse(sample.input), {}, {}};
  t.input = Compile(t.seq, {});
  t.gold = GoldPositions(t.seq, SplitTokens(sample.target));
  return t;
}

SearchResult Climb(const TrainingSample& train, const SearchConfig& config,
                   uint64_t seed) {
  Rng rng(seed);
  SearchResult result;
  ProgramTable& table = result.table;
  for (int i = 0; i < kTableSize; ++i) {
    table.set(i, static_cast<Action>(rng.UniformInt(0, kNumActions - 1)));
  }
  // Fitness plus the number of machine actions spent on the sample; the
  // count only matters once the table is perfect.
  struct Score {
    Fitness fitness;
    int actions = 0;
  };
  auto evaluate = [&] {
    const RawRun run = Execute(table, train.input, nullptr, nullptr);
    return Score{PositionalFitness(run.emitted, train.gold), run.actions};
  };
  Score current = evaluate();
  result.stats.trajectory.push_back({0, current.fitness.matches});

  // Reaching a perfect table moves the climb into a polish phase of
  // polish_steps further steps. Equal fitness says nothing about which of
  // several perfect tables generalizes; a single sample can make a
  // coincidental route look as good as the intended one, and such routes
  // tend to cost extra actions. Polishing keeps the table perfect while
  // driving the action count down.
  int limit = current.fitness.perfect ? config.polish_steps : config.steps;
  std::array<int, kTableSize> accepted{};
  std::array<double, kTableSize> weight{};
  int steps_done = 0;
  for (int step = 1; step <= limit; ++step) {
    double total = 0.0;
    for (int i = 0; i < kTableSize; ++i) {
      weight[i] = 1.0 / (1.0 + config.penalty * accepted[i]);
      total += weight[i];
    }
    double pick = rng.UniformUnit() * total;
    int param = kTableSize - 1;
    for (int i = 0; i < kTableSize; ++i) {
      pick -= weight[i];
      if (pick < 0.0) {
        param = i;
        break;
      }
    }
    const Action old = table.at(param);
    int replacement = static_cast<int>(rng.UniformInt(0, kNumActions - 2));
    if (replacement >= static_cast<int>(old)) ++replacement;
    table.set(param, static_cast<Action>(replacement));

    const Score candidate = evaluate();
    steps_done = step;
    bool accept;
    if (current.fitness.perfect) {
      accept = candidate.fitness.perfect &&
               (candidate.actions < current.actions ||
                (config.accept_equal && candidate.actions == current.actions));
    } else {
      accept = candidate.fitness > current.fitness ||
               (config.accept_equal && candidate.fitness == current.fitness);
    }
    if (accept) {
      if (candidate.fitness > current.fitness) {
        result.stats.trajectory.push_back({step, candidate.fitness.matches});
        if (candidate.fitness.perfect) limit = step + config.polish_steps;
      }
      current = candidate;
      ++accepted[param];
    } else {
      table.set(param, old);
    }
  }
  result.stats.train_actions = current.actions;
  result.stats.best = current.fitness;
  result.stats.perfect = current.fitness.perfect;
  result.stats.total_steps = steps_done;
  result.stats.restarts_used = 1;
  return result;
}

// Folds restart results in index order. Returns true once a perfect restart
// has been absorbed.
bool Absorb(SearchResult& best, bool& have, SearchResult&& next, int index) {
  const int64_t steps = best.stats.total_steps + next.stats.total_steps;
  if (!have || next.stats.best > best.stats.best) {
    best = std::move(next);
    best.stats.best_restart = index;
    have = true;
  }
  best.stats.total_steps = steps;
  best.stats.restarts_used = index + 1;
  return best.stats.perfect;
}

}  // namespace

std::string_view OutcomeName(Outcome o) {
  return kOutcomeNames[static_cast<int>(o)];
}

std::string_view ActionName(Action a) {
  return kActionNames[static_cast<int>(a)];
}

std::optional<Outcome> ParseOutcome(std::string_view name) {
  for (int i = 0; i < kNumOutcomes; ++i) {
    if (kOutcomeNames[i] == name) return static_cast<Outcome>(i);
  }
  return std::nullopt;
}

std::optional<Action> ParseAction(std::string_view name) {
  for (int i = 0; i < kNumActions; ++i) {
    if (kActionNames[i] == name) return static_cast<Action>(i);
  }
  return std::nullopt;
}

std::string_view HaltName(Halt h) {
  switch (h) {
    case Halt::kEos:
      return "eos";
    case Halt::kErrorOutput:
      return "error_output";
    case Halt::kActionLimit:
      return "action_limit";
    case Halt::kOutputLimit:
      return "output_limit";
  }
  return "unknown";
}

nlohmann::ordered_json ProgramTable::ToJson() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (int p = 0; p < kNumOutcomes; ++p) {
    for (int l = 0; l < kNumOutcomes; ++l) {
      const std::string key = std::string(OutcomeName(Outcome(p))) + "," +
                              std::string(OutcomeName(Outcome(l)));
      out[key] = std::string(ActionName(entries_[p * kNumOutcomes + l]));
    }
  }
  return out;
}

ProgramTable ProgramTable::FromJson(const nlohmann::json& j) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kMalformedRecord, "program table: " + why);
  };
  if (!j.is_object()) fail("expected an object");
  if (j.size() != static_cast<std::size_t>(kTableSize)) {
    fail("expected " + std::to_string(kTableSize) + " entries, got " +
         std::to_string(j.size()));
  }
  ProgramTable table;
  std::array<bool, kTableSize> seen{};
  for (const auto& [key, value] : j.items()) {
    const std::size_t comma = key.find(',');
    if (comma == std::string::npos) fail("key '" + key + "' lacks a comma");
    const auto prev = ParseOutcome(std::string_view(key).substr(0, comma));
    const auto last = ParseOutcome(std::string_view(key).substr(comma + 1));
    if (!prev || !last) fail("unknown outcome in '" + key + "'");
    if (!value.is_string()) fail("value of '" + key + "' is not a string");
    const auto action = ParseAction(value.get<std::string>());
    if (!action) fail("unknown action '" + value.get<std::string>() + "'");
    const int index = Index(*prev, *last);
    if (seen[index]) fail("'" + key + "' repeated");
    seen[index] = true;
    table.set(index, *action);
  }
  return table;
}

RunResult RunProgram(const ProgramTable& table, const Seq& input,
                     const MachineLimits& limits, bool record_trace) {
  const CompiledInput compiled = Compile(input, limits);
  RunResult result;
  RawRun raw = Execute(table, compiled, &input,
                       record_trace ? &result.trace : nullptr);
  result.answer.reserve(raw.emitted.size());
  for (int p : raw.emitted) result.answer.push_back(input.token(p));
  result.halt = raw.halt;
  result.max_actions_in_pass = raw.max_actions_in_pass;
  return result;
}

std::string FormatTrace(const RunResult& result) {
  std::ostringstream out;
  for (const TraceStep& s : result.trace) {
    out << "pass " << s.pass << "  " << ActionName(s.action) << " -> "
        << OutcomeName(s.outcome) << "  current=" << s.current << "\n";
  }
  out << "halt " << HaltName(result.halt) << "\n";
  return out.str();
}

ProgramTable ReferenceProgram() {
  using O = Outcome;
  using A = Action;
  ProgramTable t;
  t.set(O::kBos, O::kBos, A::kLastOutput);
  t.set(O::kBos, O::kLastOutput, A::kIsStart);
  // First pass: the answer opens with the start word's right neighbor.
  t.set(O::kLastOutput, O::kIsStartTrue, A::kRight);
  t.set(O::kIsStartTrue, O::kRight, A::kOutput);
  // Later passes: left, match, and stop when the match fails.
  t.set(O::kLastOutput, O::kIsStartFalse, A::kLeft);
  t.set(O::kIsStartFalse, O::kLeft, A::kMatch);
  t.set(O::kLeft, O::kMatch, A::kIsError);
  t.set(O::kMatch, O::kIsErrorTrue, A::kEos);
  t.set(O::kMatch, O::kIsErrorFalse, A::kRight);
  t.set(O::kIsErrorFalse, O::kRight, A::kOutput);
  return t;
}

Fitness ComputeFitness(std::span<const std::string> generated,
                       std::span<const std::string> gold) {
  Fitness f;
  const std::size_t n = std::min(generated.size(), gold.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (generated[i] == gold[i]) ++f.matches;
  }
  f.perfect = generated.size() == gold.size() &&
              f.matches == static_cast<int>(gold.size());
  return f;
}

Fitness ProgramFitness(const ProgramTable& table, const Sample& sample) {
  const Seq seq = Seq::Parse(sample.input);
  return ComputeFitness(RunProgram(table, seq).answer,
                        SplitTokens(sample.target));
}

void SearchConfig::Validate() const {
  if (restarts < 1 || steps < 1) {
    throw Error(ErrorCode::kInvalidConfig, "restarts and steps must be >= 1");
  }
  if (polish_steps < 0) {
    throw Error(ErrorCode::kInvalidConfig, "polish_steps must be >= 0");
  }
  if (!(penalty >= 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "penalty must be >= 0");
  }
}

nlohmann::ordered_json SearchStats::ToJson() const {
  nlohmann::ordered_json out;
  out["perfect"] = perfect;
  out["fitness"] = best.matches;
  out["best_restart"] = best_restart;
  out["restarts_used"] = restarts_used;
  out["total_steps"] = total_steps;
  out["train_actions"] = train_actions;
  nlohmann::ordered_json traj = nlohmann::ordered_json::array();
  for (const auto& [step, matches] : trajectory) traj.push_back({step, matches});
  out["trajectory"] = std::move(traj);
  return out;
}

SearchResult HillClimbOnce(const Sample& sample, const SearchConfig& config,
                           uint64_t seed) {
  config.Validate();
  return Climb(Prepare(sample), config, seed);
}

SearchResult HillClimb(const Sample& sample, const SearchConfig& config,
                       uint64_t seed) {
  config.Validate();
  const TrainingSample train = Prepare(sample);
  SearchResult best;
  bool have = false;
  for (int r = 0; r < config.restarts; ++r) {
    if (Absorb(best, have, Climb(train, config, DeriveSeed(seed, r)), r)) break;
  }
  return best;
}

SearchResult HillClimbParallel(const Sample& sample,
                               const SearchConfig& config, uint64_t seed) {
  config.Validate();
  const TrainingSample train = Prepare(sample);
  // Chunks bound the wasted work past the first perfect restart.
  const int chunk = std::max(1, 2 * omp_get_max_threads());
  SearchResult best;
  bool have = false;
  for (int base = 0; base < config.restarts; base += chunk) {
    const int count = std::min(chunk, config.restarts - base);
    std::vector<SearchResult> results(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < count; ++k) {
      results[k] = Climb(train, config, DeriveSeed(seed, base + k));
    }
    for (int k = 0; k < count; ++k) {
      if (Absorb(best, have, std::move(results[k]), base + k)) return best;
    }
  }
  return best;
}

double ProgramAccuracy(const ProgramTable& table,
                       std::span<const Sample> samples) {
  if (samples.empty()) return 0.0;
  std::size_t correct = 0;
  for (const Sample& s : samples) {
    const std::vector<std::string> answer =
        RunProgram(table, Seq::Parse(s.input)).answer;
    if (answer == SplitTokens(s.target)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(samples.size());
}

}  // namespace pointer_suite

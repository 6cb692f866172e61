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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fixtures.h"
#include "pointer_suite/error.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/seq.h"
#include "pointer_suite/solver.h"
#include "pointer_suite/tasks.h"

namespace pointer_suite {
namespace {

using Tokens = std::vector<std::string>;

Sample SmallPen() {
  Sample s;
  s.task = TaskId::kPen;
  s.input = std::string(fixtures::kPenSmall);
  s.target = OracleTarget(TaskId::kPen, s.input);
  return s;
}

TEST(NamesTest, RoundTrip) {
  for (int i = 0; i < kNumOutcomes; ++i) {
    const auto o = static_cast<Outcome>(i);
    EXPECT_EQ(ParseOutcome(OutcomeName(o)), o);
  }
  for (int i = 0; i < kNumActions; ++i) {
    const auto a = static_cast<Action>(i);
    EXPECT_EQ(ParseAction(ActionName(a)), a);
  }
  EXPECT_EQ(kTableSize, 121);
}

TEST(RunProgramTest, ReferenceOnTrapExample) {
  const RunResult r = RunProgram(ReferenceProgram(), Seq::Parse(fixtures::kPenSmall));
  EXPECT_EQ(JoinTokens(r.answer), "xy wv7ql xy5wv");
  EXPECT_EQ(r.halt, Halt::kEos);
  EXPECT_LE(r.max_actions_in_pass, MachineLimits::kMaxActionsPerPass);
  EXPECT_EQ(ProgramFitness(ReferenceProgram(), SmallPen()),
            (Fitness{3, true}));
}

TEST(RunProgramTest, ImmediateEos) {
  const ProgramTable t;  // every entry EOS
  const RunResult r = RunProgram(t, Seq::Parse(fixtures::kPenSmall));
  EXPECT_TRUE(r.answer.empty());
  EXPECT_EQ(ProgramFitness(t, SmallPen()), (Fitness{0, false}));
}

TEST(RunProgramTest, OutputOfErrorHalts) {
  ProgramTable t;
  t.set(Outcome::kBos, Outcome::kBos, Action::kOutput);
  const RunResult r = RunProgram(t, Seq::Parse(fixtures::kPenSmall));
  EXPECT_TRUE(r.answer.empty());
  EXPECT_EQ(r.halt, Halt::kErrorOutput);
}

TEST(RunProgramTest, ActionCapPerPass) {
  // LEFT forever from the start word: ERROR stays ERROR, never outputs.
  ProgramTable t;
  for (int i = 0; i < kTableSize; ++i) t.set(i, Action::kLeft);
  const RunResult r = RunProgram(t, Seq::Parse(fixtures::kPenSmall), {}, true);
  EXPECT_TRUE(r.answer.empty());
  EXPECT_EQ(r.halt, Halt::kActionLimit);
  EXPECT_EQ(r.max_actions_in_pass, MachineLimits::kMaxActionsPerPass);
  EXPECT_FALSE(FormatTrace(r).empty());
}

TEST(RunProgramTest, OutputCap) {
  // LAST_OUTPUT then OUTPUT keeps emitting the start word.
  ProgramTable t;
  t.set(Outcome::kBos, Outcome::kBos, Action::kLastOutput);
  t.set(Outcome::kBos, Outcome::kLastOutput, Action::kOutput);
  MachineLimits limits;
  limits.max_output_words = 5;
  const RunResult r = RunProgram(t, Seq::Parse(fixtures::kPenSmall), limits);
  EXPECT_EQ(r.answer.size(), 5u);
  EXPECT_EQ(r.halt, Halt::kOutputLimit);
}

TEST(RunProgramTest, ReferenceAgreesWithOracle) {
  for (bool traps : {true, false}) {
    SuiteConfig cfg;
    cfg.pen.traps = traps;
    for (const Sample& s : GenerateSerial(TaskId::kPen, cfg, 31, 0, 300)) {
      ASSERT_EQ(JoinTokens(RunProgram(ReferenceProgram(), Seq::Parse(s.input)).answer),
                s.target);
    }
  }
}

TEST(FitnessTest, Rules) {
  const Tokens gold = {"a", "b", "c"};
  EXPECT_EQ(ComputeFitness(gold, gold), (Fitness{3, true}));
  EXPECT_EQ(ComputeFitness(Tokens{"a", "b", "c", "junk"}, gold),
            (Fitness{3, false}));
  EXPECT_EQ(ComputeFitness(Tokens{"a", "x", "c"}, gold), (Fitness{2, false}));
  EXPECT_EQ(ComputeFitness(Tokens{}, gold), (Fitness{0, false}));
  EXPECT_LT((Fitness{3, false}), (Fitness{3, true}));
  EXPECT_LT((Fitness{2, true}), (Fitness{3, false}));
}

TEST(ProgramTableTest, JsonRoundTrip) {
  const ProgramTable ref = ReferenceProgram();
  const auto j = ref.ToJson();
  EXPECT_EQ(j.size(), 121u);
  EXPECT_EQ(j["BOS,BOS"], "LAST_OUTPUT");
  EXPECT_EQ(ProgramTable::FromJson(j), ref);
  auto broken = nlohmann::json::parse(j.dump());
  broken.erase("BOS,BOS");
  EXPECT_THROW(ProgramTable::FromJson(broken), Error);
  broken = nlohmann::json::parse(j.dump());
  broken["BOS,BOS"] = "JUMP";
  EXPECT_THROW(ProgramTable::FromJson(broken), Error);
}

TEST(HillClimbTest, DeterministicAndParallelAgrees) {
  const Sample train =
      Generate(TaskId::kPen, SuiteConfig{}, SampleSeed(1, TaskId::kPen, 0));
  SearchConfig cfg;
  cfg.restarts = 6;
  cfg.steps = 1500;
  const SearchResult a = HillClimb(train, cfg, 17);
  const SearchResult b = HillClimb(train, cfg, 17);
  const SearchResult c = HillClimbParallel(train, cfg, 17);
  EXPECT_EQ(a.table, b.table);
  EXPECT_EQ(a.table, c.table);
  EXPECT_EQ(a.stats.ToJson().dump(), c.stats.ToJson().dump());
}

TEST(HillClimbTest, TrajectoryNonDecreasing) {
  const Sample train =
      Generate(TaskId::kPen, SuiteConfig{}, SampleSeed(2, TaskId::kPen, 0));
  SearchConfig cfg;
  cfg.restarts = 1;
  cfg.steps = 3000;
  const SearchResult r = HillClimbOnce(train, cfg, 5);
  for (std::size_t i = 1; i < r.stats.trajectory.size(); ++i) {
    EXPECT_GE(r.stats.trajectory[i].first, r.stats.trajectory[i - 1].first);
    EXPECT_GE(r.stats.trajectory[i].second, r.stats.trajectory[i - 1].second);
  }
  EXPECT_EQ(ProgramFitness(r.table, train), r.stats.best);
}

TEST(HillClimbTest, LearnsFromOneSample) {
  const Sample train =
      Generate(TaskId::kPen, SuiteConfig{}, SampleSeed(3, TaskId::kPen, 0));
  const SearchResult r = HillClimb(train, SearchConfig{}, 3);
  ASSERT_TRUE(r.stats.perfect);
  const auto holdout =
      GenerateSerial(TaskId::kPen, SuiteConfig{}, 3, uint64_t{1} << 32, 100);
  EXPECT_EQ(ProgramAccuracy(r.table, holdout), 1.0);
}

TEST(HillClimbTest, RejectsOtherTasksAndBadConfigs) {
  const Sample cpy = Generate(TaskId::kCpy, SuiteConfig{}, 1);
  EXPECT_THROW(HillClimb(cpy, SearchConfig{}, 1), Error);
  SearchConfig bad;
  bad.restarts = 0;
  EXPECT_THROW(bad.Validate(), Error);
  bad = SearchConfig{};
  bad.penalty = -1;
  EXPECT_THROW(bad.Validate(), Error);
  bad = SearchConfig{};
  bad.polish_steps = -1;
  EXPECT_THROW(bad.Validate(), Error);
}

// Polishing starts from the table the unpolished climb returns (same streams
// up to the first perfect restart), so it can only keep perfection and shed
// actions.
std::size_t ReferenceActionCount(const ProgramTable& t, const Sample& s) {
  return RunProgram(t, Seq::Parse(s.input), {}, true).trace.size();
}

TEST(HillClimbTest, PolishKeepsPerfectionAndShedsActions) {
  int compared = 0;
  for (uint64_t seed = 1; seed <= 3; ++seed) {
    const Sample train =
        Generate(TaskId::kPen, SuiteConfig{}, SampleSeed(seed, TaskId::kPen, 0));
    SearchConfig plain;
    plain.polish_steps = 0;
    const SearchResult a = HillClimb(train, plain, seed);
    const SearchResult b = HillClimb(train, SearchConfig{}, seed);
    EXPECT_EQ(a.stats.best_restart, b.stats.best_restart);
    EXPECT_EQ(a.stats.perfect, b.stats.perfect);
    if (!a.stats.perfect) continue;
    ++compared;
    EXPECT_TRUE(ProgramFitness(b.table, train).perfect);
    EXPECT_LE(b.stats.train_actions, a.stats.train_actions);
    EXPECT_EQ(b.stats.train_actions,
              static_cast<int>(ReferenceActionCount(b.table, train)));
  }
  EXPECT_GT(compared, 0);
}

}  // namespace
}  // namespace pointer_suite

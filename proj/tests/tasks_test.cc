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

#include <map>

#include "pointer_suite/error.h"
#include "pointer_suite/tasks.h"
#include "pointer_suite/validation.h"

namespace pointer_suite {
namespace {

TEST(TasksTest, NamesRoundTrip) {
  for (TaskId t : kAllTasks) EXPECT_EQ(ParseTaskName(TaskName(t)), t);
  EXPECT_EQ(ParseTaskName("pen"), TaskId::kPen);
  EXPECT_FALSE(ParseTaskName("pens").has_value());
}

TEST(TasksTest, EveryTaskAgreesWithItsOracle) {
  for (TaskId t : kAllTasks) {
    for (const Sample& s : GenerateSerial(t, SuiteConfig{}, 2, 0, 300)) {
      ASSERT_EQ(OracleTarget(t, s.input), s.target) << TaskName(t);
      const Violations v = ValidateSample(s);
      ASSERT_TRUE(v.empty()) << TaskName(t) << ": " << v.front().detail;
    }
  }
}

TEST(TasksTest, WrongTargetIsFlagged) {
  Sample s = Generate(TaskId::kPen, SuiteConfig{}, 4);
  s.target += " ab";
  EXPECT_TRUE(HasViolation(ValidateSample(s), ViolationKind::kTargetMismatch));
  Sample bad;
  bad.task = TaskId::kMul;
  bad.input = "12 + 3";
  bad.target = "15";
  EXPECT_FALSE(ValidateSample(bad).empty());
}

TEST(TasksTest, ParallelMatchesSerial) {
  for (TaskId t : {TaskId::kPen, TaskId::kPerm, TaskId::kMul}) {
    EXPECT_EQ(GenerateSerial(t, SuiteConfig{}, 9, 100, 200),
              GenerateParallel(t, SuiteConfig{}, 9, 100, 200));
  }
}

TEST(TasksTest, IndexAddressing) {
  // Sample i depends only on (master, task, i), not on the batch.
  const auto all = GenerateSerial(TaskId::kPe, SuiteConfig{}, 5, 0, 20);
  const auto tail = GenerateSerial(TaskId::kPe, SuiteConfig{}, 5, 10, 10);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(all[10 + i], tail[i]);
  EXPECT_NE(SampleSeed(5, TaskId::kPe, 0), SampleSeed(5, TaskId::kPen, 0));
}

TEST(MixTest, ParseAndRender) {
  const auto mix = ParseMixSpec("pen=5, cpy=2");
  ASSERT_EQ(mix.size(), 2u);
  EXPECT_EQ(mix[0], (MixEntry{TaskId::kPen, 5}));
  EXPECT_EQ(mix[1], (MixEntry{TaskId::kCpy, 2}));
  EXPECT_EQ(RenderMixSpec(mix), "PEN=5,CPY=2");
  EXPECT_THROW(ParseMixSpec("pen=5,pen=1"), Error);
  EXPECT_THROW(ParseMixSpec("pen"), Error);
  try {
    ParseMixSpec("foo=3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedTask);
  }
}

TEST(MixTest, CountsAndDeterminism) {
  const auto mix = ParseMixSpec("pen=5,cpy=2");
  const auto a = GenerateMix(mix, SuiteConfig{}, 7, false);
  const auto b = GenerateMix(mix, SuiteConfig{}, 7, true);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 7u);
  std::map<TaskId, int> counts;
  for (const Sample& s : a) ++counts[s.task];
  EXPECT_EQ(counts[TaskId::kPen], 5);
  EXPECT_EQ(counts[TaskId::kCpy], 2);
}

}  // namespace
}  // namespace pointer_suite

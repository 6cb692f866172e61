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

#include <algorithm>
#include <set>
#include <string>

#include "fixtures.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/seq.h"
#include "pointer_suite/validation.h"
#include "pointer_suite/vocabulary.h"

namespace pointer_suite {
namespace {

std::string Pen(std::string_view in) { return JoinTokens(OraclePen(Seq::Parse(in))); }
std::string Pe(std::string_view in) { return JoinTokens(OraclePe(Seq::Parse(in))); }
std::string Pev(std::string_view in) { return JoinTokens(OraclePev(Seq::Parse(in))); }

std::string Without(std::string_view input, const std::string& token) {
  std::vector<std::string> t = SplitTokens(input);
  t.erase(std::find(t.begin(), t.end(), token));
  return JoinTokens(t);
}

TEST(PenOracleTest, PrintedExamples) {
  EXPECT_EQ(Pen(fixtures::kPenLong), fixtures::kPenLongAnswer);
  EXPECT_EQ(Pen(fixtures::kPenSmall), "xy wv7ql xy5wv");
  EXPECT_EQ(Pen("ab xy ab4fq wv7ql"), "xy wv7ql");
}

TEST(PenOracleTest, SubTasks) {
  EXPECT_EQ(Pe(fixtures::kPenSmall), "ab ab4fq fq0zz");
  EXPECT_EQ(Pe("ab xy ab4fq wv7ql"), "ab ab4fq");
  EXPECT_EQ(Pe("ab xy cd4fq wv7ql"), "ab");
  EXPECT_EQ(Pev(fixtures::kPenSmall), "ab xy ab4fq wv7ql fq0zz xy5wv");
  EXPECT_EQ(Pev("ab xy cd4fq wv7ql"), "ab xy");
}

TEST(CopyOracleTest, IdentityAndReversal) {
  EXPECT_EQ(JoinTokens(OracleCpy(Seq::Parse("ab4fq wv7ql"))), "ab4fq wv7ql");
  EXPECT_EQ(JoinTokens(OracleRcpy(Seq::Parse("ab4fq wv7ql"))), "wv7ql ab4fq");
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    const Sample s = GenRcpy(CopyConfig{}, seed);
    const std::string twice =
        JoinTokens(OracleRcpy(Seq::Parse(s.target)));
    ASSERT_EQ(twice, s.input);
    ASSERT_EQ(GenCpy(CopyConfig{}, seed).target,
              GenCpy(CopyConfig{}, seed).input);
  }
}

TEST(PenValidatorTest, PrintedExamplesAreClean) {
  EXPECT_TRUE(ValidatePen(Seq::Parse(fixtures::kPenSmall)).empty());
  EXPECT_TRUE(ValidatePen(Seq::Parse(fixtures::kPenLong)).empty());
}

TEST(PenValidatorTest, MissingDoppelganger) {
  const Violations v =
      ValidatePen(Seq::Parse(Without(fixtures::kPenSmall, "xy2wv")));
  EXPECT_TRUE(HasViolation(v, ViolationKind::kMissingDoppelganger));
}

TEST(PenValidatorTest, DuplicateToken) {
  const Violations v = ValidatePen(
      Seq::Parse(std::string(fixtures::kPenSmall) + " rt8gt"));
  EXPECT_TRUE(HasViolation(v, ViolationKind::kDuplicateToken));
}

TEST(PenValidatorTest, AmbiguousGreenMatch) {
  // A second word with prefix "ab" on an even slot makes the first hop
  // ambiguous.
  const Violations v = ValidatePen(
      Seq::Parse(std::string(fixtures::kPenSmall) + " ab9cd ef1gh"));
  EXPECT_FALSE(v.empty());
}

class PenGeneratorTest : public ::testing::TestWithParam<bool> {};

TEST_P(PenGeneratorTest, StructureHolds) {
  PenConfig cfg;
  cfg.traps = GetParam();
  for (uint64_t seed = 0; seed < 500; ++seed) {
    const Sample s = GenPen(cfg, seed);
    const Seq seq = Seq::Parse(s.input);
    const std::vector<std::string> answer = SplitTokens(s.target);
    const int m = s.meta.at("m").get<int>();
    ASSERT_EQ(answer.size(), static_cast<std::size_t>(m + 1));
    ASSERT_EQ(answer[0], seq.token(1));
    ASSERT_GE(seq.size(), static_cast<std::size_t>(2 * (m + 1)));
    ASSERT_TRUE(seq.AllDistinct());
    ASSERT_EQ(JoinTokens(OraclePen(seq)), s.target);
    ASSERT_TRUE(ValidatePen(seq, cfg.traps).empty()) << s.input;
    if (!cfg.traps) {
      // Without traps no yellow suffix is a prefix of two words.
      for (std::size_t i = 1; i < answer.size(); ++i) {
        const Word y = ParseWord(answer[i]);
        ASSERT_LE(seq.WithPrefix(y.suffix()).size(), 1u);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Traps, PenGeneratorTest, ::testing::Bool());

TEST(PenGeneratorTest2, SameSeedSameSample) {
  EXPECT_EQ(GenPen(PenConfig{}, 99), GenPen(PenConfig{}, 99));
  EXPECT_NE(GenPen(PenConfig{}, 99).input, GenPen(PenConfig{}, 100).input);
}

TEST(PenGeneratorTest2, ChainLengthRespected) {
  PenConfig cfg;
  cfg.chain_len = {3, 3};
  for (uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(GenPen(cfg, seed).meta.at("m"), 3);
  }
}

TEST(PenGeneratorTest2, NaturalVocabulary) {
  std::vector<std::string> words;
  const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  for (char a : letters) {
    for (char b : letters.substr(0, 6)) words.push_back(std::string{a, b, 'x'});
  }
  PenConfig cfg;
  cfg.natural_pool = std::make_shared<GramPool>(GramPool::FromWords(words));
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const Sample s = GenPen(cfg, seed);
    const Seq seq = Seq::Parse(s.input, Vocab::kNatural);
    EXPECT_EQ(JoinTokens(OraclePen(seq)), s.target);
    EXPECT_TRUE(ValidatePen(seq).empty());
  }
}

}  // namespace
}  // namespace pointer_suite

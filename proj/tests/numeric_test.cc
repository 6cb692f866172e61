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

#include "pointer_suite/error.h"
#include "pointer_suite/numeric.h"
#include "pointer_suite/rng.h"
#include "pointer_suite/tasks.h"

namespace pointer_suite {
namespace {

using Int128 = unsigned __int128;

std::string ToDecimalString(Int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

uint64_t RandomOperand(Rng& rng, int max_digits) {
  const int digits = static_cast<int>(rng.UniformInt(1, max_digits));
  uint64_t lo = 1;
  for (int i = 1; i < digits; ++i) lo *= 10;
  const uint64_t hi = lo * 10 - 1;
  return static_cast<uint64_t>(
      rng.UniformInt(digits == 1 ? 0 : static_cast<int64_t>(lo),
                     static_cast<int64_t>(hi)));
}

TEST(DecimalTest, ParseAndPrint) {
  EXPECT_EQ(Decimal::Parse("0").ToString(), "0");
  EXPECT_EQ(Decimal::Parse("1203").ToString(), "1203");
  EXPECT_TRUE(Decimal::Parse("0").is_zero());
  EXPECT_EQ(Decimal::Parse("1203").num_digits(), 4u);
  EXPECT_EQ(Decimal::Parse("1203").digit(0), 3);
  EXPECT_EQ(Decimal::FromUint(18446744073709551615ULL).ToString(),
            "18446744073709551615");
  for (const char* bad : {"", "012", "12a", "-3"}) {
    EXPECT_THROW(Decimal::Parse(bad), Error) << bad;
  }
}

TEST(MulTest, Examples) {
  const Decimal x = Decimal::Parse("98765");
  EXPECT_EQ(OracleMul(x, Decimal::Parse("1")), x);
  EXPECT_EQ(OracleDmul(Decimal::Parse("234"), 2).ToString(), "468");
  EXPECT_EQ(OracleMul(Decimal::Parse("123"), Decimal::Parse("45")).ToString(),
            "5535");
  EXPECT_EQ(OracleMul(Decimal::Parse("0"), Decimal::Parse("45")).ToString(),
            "0");
  const std::vector<Decimal> addends = {Decimal::Parse("12"),
                                        Decimal::Parse("34"),
                                        Decimal::Parse("5")};
  EXPECT_EQ(OracleAdd(addends).ToString(), "51");
}

TEST(MulTest, MatchesWideIntegers) {
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const uint64_t a = RandomOperand(rng, 12);
    const uint64_t b = RandomOperand(rng, 12);
    const std::string want = ToDecimalString(Int128{a} * b);
    ASSERT_EQ(OracleMul(Decimal::FromUint(a), Decimal::FromUint(b)).ToString(),
              want)
        << a << " * " << b;
  }
}

TEST(MulTest, DmulAndAddMatchWideIntegers) {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const uint64_t a = RandomOperand(rng, 18);
    const int d = static_cast<int>(rng.UniformInt(0, 9));
    ASSERT_EQ(OracleDmul(Decimal::FromUint(a), d).ToString(),
              ToDecimalString(Int128{a} * static_cast<unsigned>(d)));
    std::vector<Decimal> addends;
    Int128 sum = 0;
    for (int k = 0; k < 5; ++k) {
      const uint64_t v = RandomOperand(rng, 18);
      addends.push_back(Decimal::FromUint(v));
      sum += v;
    }
    ASSERT_EQ(OracleAdd(addends).ToString(), ToDecimalString(sum));
  }
}

TEST(InfixTest, ParseRender) {
  const auto ops = ParseInfix("12 + 34 + 5", '+');
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(RenderInfix(ops, '+'), "12 + 34 + 5");
  EXPECT_THROW(ParseInfix("12 * 34", '+'), Error);
  EXPECT_THROW(ParseInfix("12 +", '+'), Error);
}

TEST(HssTest, Examples) {
  EXPECT_EQ(OracleHss(std::vector<int64_t>{7}), 7);
  EXPECT_EQ(OracleHss(std::vector<int64_t>{5, 1, 1, 5}), 10);
  EXPECT_EQ(OracleHss(std::vector<int64_t>{0, 0, 0}), 0);
  EXPECT_EQ(OracleSse(std::vector<int64_t>{5, 1, 1, 5}), "5:T 5:S 6:T 10:T");
  EXPECT_EQ(OracleSse(std::vector<int64_t>{7}), "7:T");
}

TEST(HssTest, MatchesBruteForce) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::vector<int64_t> v(static_cast<std::size_t>(rng.UniformInt(1, 20)));
    for (auto& x : v) x = rng.UniformInt(0, 99);
    ASSERT_EQ(OracleHss(v), BruteForceHss(v));
  }
  EXPECT_THROW(BruteForceHss(std::vector<int64_t>(25, 1)), Error);
}

TEST(HssTest, TraceRecurrenceAndMonotone) {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    std::vector<int64_t> v(static_cast<std::size_t>(rng.UniformInt(1, 30)));
    for (auto& x : v) x = rng.UniformInt(0, 99);
    const auto trace = HssTrace(v);
    int64_t prev2 = 0, prev1 = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const int64_t take = prev2 + v[k];
      ASSERT_EQ(trace[k].dp, std::max(take, prev1));
      ASSERT_EQ(trace[k].taken, take > prev1);
      ASSERT_GE(trace[k].dp, prev1);
      prev2 = prev1;
      prev1 = trace[k].dp;
    }
  }
}

TEST(NumericGeneratorTest, TargetsFollowOracles) {
  EXPECT_EQ(OracleTarget(TaskId::kHss, "5 1 1 5"), "10");
  EXPECT_EQ(OracleTarget(TaskId::kDmul, "234 * 2"), "468");
  EXPECT_EQ(OracleTarget(TaskId::kAdd, "12 + 34 + 5"), "51");
  const MulConfig mul;
  const HssConfig hss;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    for (const Sample& s : {GenHss(hss, seed), GenSse(hss, seed),
                            GenMul(mul, seed), GenDmul(mul, seed),
                            GenAdd(mul, seed)}) {
      ASSERT_EQ(OracleTarget(s.task, s.input), s.target) << s.input;
      ASSERT_TRUE(ValidateSample(s).empty()) << s.input;
    }
  }
}

TEST(NumericGeneratorTest, OperandDigitCounts) {
  MulConfig cfg;
  cfg.mul_digits_a = {3, 3};
  cfg.mul_digits_b = {5, 5};
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto ops = ParseInfix(GenMul(cfg, seed).input, '*');
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_EQ(ops[0].num_digits(), 3u);
    EXPECT_EQ(ops[1].num_digits(), 5u);
  }
}

}  // namespace
}  // namespace pointer_suite

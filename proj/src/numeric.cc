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

#include "pointer_suite/numeric.h"

#include <algorithm>
#include <string>

#include "pointer_suite/error.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {
namespace {

constexpr std::size_t kBruteForceLimit = 24;

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedRecord, why);
}

std::vector<int64_t> DrawNumbers(const HssConfig& config, Rng& rng) {
  const int n = rng.UniformInt(config.length);
  std::vector<int64_t> numbers(n);
  for (int64_t& x : numbers) x = rng.UniformInt(config.values);
  return numbers;
}

std::string RenderNumbers(std::span<const int64_t> numbers) {
  std::string out;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(numbers[i]);
  }
  return out;
}

nlohmann::json NumberMeta(uint64_t seed, std::span<const int64_t> numbers) {
  return {{"seed", seed}, {"length", numbers.size()}};
}

void RequireRange(const IntRange& r, int min, const char* name) {
  if (r.lo < min) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(name) + " must be >= " + std::to_string(min));
  }
}

}  // namespace

Decimal Decimal::Parse(std::string_view text) {
  if (text.empty()) Malformed("empty number");
  if (!std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    Malformed("'" + std::string(text) + "' is not a base-10 number");
  }
  if (text.size() > 1 && text.front() == '0') {
    Malformed("'" + std::string(text) + "' has a leading zero");
  }
  Decimal out;
  out.digits_.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    out.digits_.push_back(static_cast<uint8_t>(*it - '0'));
  }
  out.Trim();
  return out;
}

Decimal Decimal::FromUint(uint64_t value) {
  Decimal out;
  while (value > 0) {
    out.digits_.push_back(static_cast<uint8_t>(value % 10));
    value /= 10;
  }
  return out;
}

std::string Decimal::ToString() const {
  if (digits_.empty()) return "0";
  std::string out;
  out.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    out += static_cast<char>('0' + *it);
  }
  return out;
}

void Decimal::Trim() {
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

Decimal DigitMul(const Decimal& a, int d) {
  Decimal out;
  if (d == 0 || a.is_zero()) return out;
  out.digits_.reserve(a.digits_.size() + 1);
  int carry = 0;
  for (uint8_t x : a.digits_) {
    const int v = x * d + carry;
    out.digits_.push_back(static_cast<uint8_t>(v % 10));
    carry = v / 10;
  }
  if (carry > 0) out.digits_.push_back(static_cast<uint8_t>(carry));
  return out;
}

Decimal ShiftedAdd(const Decimal& acc, const Decimal& part, std::size_t shift) {
  if (part.is_zero()) return acc;
  Decimal out;
  const std::size_t width =
      std::max(acc.digits_.size(), part.digits_.size() + shift) + 1;
  out.digits_.reserve(width);
  int carry = 0;
  for (std::size_t i = 0; i < width; ++i) {
    const int p = i >= shift ? part.digit(i - shift) : 0;
    const int v = acc.digit(i) + p + carry;
    out.digits_.push_back(static_cast<uint8_t>(v % 10));
    carry = v / 10;
  }
  out.Trim();
  return out;
}

Decimal OracleMul(const Decimal& a, const Decimal& b) {
  Decimal acc;
  for (std::size_t i = 0; i < b.num_digits(); ++i) {
    acc = ShiftedAdd(acc, DigitMul(a, b.digit(i)), i);
  }
  return acc;
}

Decimal OracleDmul(const Decimal& a, int d) {
  if (d < 0 || d > 9) Malformed("DMUL multiplier must be a single digit");
  return DigitMul(a, d);
}

Decimal OracleAdd(std::span<const Decimal> addends) {
  Decimal acc;
  for (const Decimal& x : addends) acc = ShiftedAdd(acc, x, 0);
  return acc;
}

std::vector<DpStep> HssTrace(std::span<const int64_t> numbers) {
  std::vector<DpStep> steps;
  steps.reserve(numbers.size());
  int64_t before_prev = 0;  // dp_{i-2}
  int64_t prev = 0;         // dp_{i-1}
  for (int64_t n : numbers) {
    const int64_t take = before_prev + n;
    const bool taken = take > prev;
    const int64_t dp = taken ? take : prev;
    steps.push_back({dp, taken});
    before_prev = prev;
    prev = dp;
  }
  return steps;
}

int64_t OracleHss(std::span<const int64_t> numbers) {
  const std::vector<DpStep> steps = HssTrace(numbers);
  return steps.empty() ? 0 : steps.back().dp;
}

int64_t BruteForceHss(std::span<const int64_t> numbers) {
  if (numbers.size() > kBruteForceLimit) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(numbers.size()) + " numbers exceed the " +
                    std::to_string(kBruteForceLimit) + "-element limit");
  }
  const uint32_t subsets = uint32_t{1} << numbers.size();
  int64_t best = 0;
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    if (mask & (mask >> 1)) continue;  // two adjacent indices
    int64_t sum = 0;
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      if (mask & (uint32_t{1} << i)) sum += numbers[i];
    }
    best = std::max(best, sum);
  }
  return best;
}

std::string OracleSse(std::span<const int64_t> numbers) {
  std::string out;
  for (const DpStep& step : HssTrace(numbers)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(step.dp);
    out += step.taken ? ":T" : ":S";
  }
  return out;
}

void HssConfig::Validate() const {
  RequireRange(length, 1, "hss length");
  RequireRange(values, 0, "hss values");
}

void MulConfig::Validate() const {
  RequireRange(mul_digits_a, 1, "mul digits_a");
  RequireRange(mul_digits_b, 1, "mul digits_b");
  RequireRange(dmul_digits, 1, "dmul digits");
  RequireRange(add_count, 1, "add count");
  RequireRange(add_digits, 1, "add digits");
}

std::vector<int64_t> ParseNumberList(std::string_view text) {
  std::vector<int64_t> out;
  for (const std::string& token : SplitTokens(text)) {
    const Decimal d = Decimal::Parse(token);
    if (d.num_digits() > 18) Malformed("number '" + token + "' too large");
    out.push_back(std::stoll(token));
  }
  if (out.empty()) Malformed("empty number list");
  return out;
}

std::vector<Decimal> ParseInfix(std::string_view text, char op) {
  const std::vector<std::string> tokens = SplitTokens(text);
  if (tokens.size() < 3 || tokens.size() % 2 == 0) {
    Malformed("expected 'a " + std::string(1, op) + " b ...'");
  }
  std::vector<Decimal> operands;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 1) {
      if (tokens[i] != std::string(1, op)) {
        Malformed("expected operator '" + std::string(1, op) + "'");
      }
      continue;
    }
    operands.push_back(Decimal::Parse(tokens[i]));
  }
  return operands;
}

std::string RenderInfix(std::span<const Decimal> operands, char op) {
  std::string out;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += op;
      out += ' ';
    }
    out += operands[i].ToString();
  }
  return out;
}

Decimal RandomDecimal(Rng& rng, int digits) {
  std::string text;
  for (int i = 0; i < digits; ++i) {
    const int lo = (i == 0 && digits > 1) ? 1 : 0;
    text += static_cast<char>('0' + rng.UniformInt(lo, 9));
  }
  return Decimal::Parse(text);
}

Sample GenHss(const HssConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const std::vector<int64_t> numbers = DrawNumbers(config, rng);
  return {TaskId::kHss, RenderNumbers(numbers),
          std::to_string(OracleHss(numbers)), NumberMeta(seed, numbers)};
}

Sample GenSse(const HssConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const std::vector<int64_t> numbers = DrawNumbers(config, rng);
  return {TaskId::kSse, RenderNumbers(numbers), OracleSse(numbers),
          NumberMeta(seed, numbers)};
}

Sample GenMul(const MulConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const int da = rng.UniformInt(config.mul_digits_a);
  const int db = rng.UniformInt(config.mul_digits_b);
  const std::vector<Decimal> operands = {RandomDecimal(rng, da),
                                         RandomDecimal(rng, db)};
  return {TaskId::kMul, RenderInfix(operands, '*'),
          OracleMul(operands[0], operands[1]).ToString(),
          {{"seed", seed}, {"digits_a", da}, {"digits_b", db}}};
}

Sample GenDmul(const MulConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const int da = rng.UniformInt(config.dmul_digits);
  const std::vector<Decimal> operands = {RandomDecimal(rng, da),
                                         RandomDecimal(rng, 1)};
  return {TaskId::kDmul, RenderInfix(operands, '*'),
          OracleDmul(operands[0], operands[1].digit(0)).ToString(),
          {{"seed", seed}, {"digits_a", da}}};
}

Sample GenAdd(const MulConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const int count = rng.UniformInt(config.add_count);
  std::vector<Decimal> addends;
  for (int i = 0; i < count; ++i) {
    addends.push_back(RandomDecimal(rng, rng.UniformInt(config.add_digits)));
  }
  return {TaskId::kAdd, RenderInfix(addends, '+'),
          OracleAdd(addends).ToString(),
          {{"seed", seed}, {"addends", count}}};
}

}  // namespace pointer_suite

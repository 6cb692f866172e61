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

#ifndef POINTER_SUITE_NUMERIC_H_
#define POINTER_SUITE_NUMERIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pointer_suite/rng.h"
#include "pointer_suite/sample.h"

namespace pointer_suite {

// Non-negative base-10 integer held as little-endian digits. Arithmetic is
// built only from the two schoolbook primitives below.
class Decimal {
 public:
  Decimal() = default;
  // Requires ASCII digits without leading zeros ("0" is allowed). Throws
  // Error(kMalformedRecord).
  static Decimal Parse(std::string_view text);
  static Decimal FromUint(uint64_t value);

  std::string ToString() const;
  std::size_t num_digits() const { return digits_.empty() ? 1 : digits_.size(); }
  int digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }
  bool is_zero() const { return digits_.empty(); }

  bool operator==(const Decimal& other) const = default;

 private:
  friend Decimal DigitMul(const Decimal& a, int d);
  friend Decimal ShiftedAdd(const Decimal& acc, const Decimal& part,
                            std::size_t shift);
  void Trim();

  std::vector<uint8_t> digits_;  // empty means zero
};

// digit_mul: a * d for a single digit d.
Decimal DigitMul(const Decimal& a, int d);
// add: acc + part * 10^shift.
Decimal ShiftedAdd(const Decimal& acc, const Decimal& part,
                   std::size_t shift = 0);

Decimal OracleMul(const Decimal& a, const Decimal& b);
Decimal OracleDmul(const Decimal& a, int d);
Decimal OracleAdd(std::span<const Decimal> addends);

// dp_i = max(dp_{i-2} + n_i, dp_{i-1}), dp_0 = dp_{-1} = 0. `taken` is set
// only on strict improvement.
struct DpStep {
  int64_t dp;
  bool taken;
};

std::vector<DpStep> HssTrace(std::span<const int64_t> numbers);
int64_t OracleHss(std::span<const int64_t> numbers);
// Exhaustive over non-adjacent index subsets; throws Error(kInstanceTooLarge)
// above 24 numbers.
int64_t BruteForceHss(std::span<const int64_t> numbers);
// "dp:T" / "dp:S" per position.
std::string OracleSse(std::span<const int64_t> numbers);

struct HssConfig {
  IntRange length{3, 10};
  IntRange values{0, 99};
  void Validate() const;
};

struct MulConfig {
  IntRange mul_digits_a{2, 4};
  IntRange mul_digits_b{2, 4};
  IntRange dmul_digits{2, 5};
  IntRange add_count{2, 4};
  IntRange add_digits{1, 5};
  void Validate() const;
};

// Space-separated non-negative integers. Throws Error(kMalformedRecord).
std::vector<int64_t> ParseNumberList(std::string_view text);
// "a <op> b <op> c" with single spaces; op is '*' or '+'.
std::vector<Decimal> ParseInfix(std::string_view text, char op);
std::string RenderInfix(std::span<const Decimal> operands, char op);

// Uniform number with exactly `digits` digits (leading digit non-zero unless
// digits == 1).
Decimal RandomDecimal(Rng& rng, int digits);

Sample GenHss(const HssConfig& config, uint64_t seed);
Sample GenSse(const HssConfig& config, uint64_t seed);
Sample GenMul(const MulConfig& config, uint64_t seed);
Sample GenDmul(const MulConfig& config, uint64_t seed);
Sample GenAdd(const MulConfig& config, uint64_t seed);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_NUMERIC_H_

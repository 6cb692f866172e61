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

#ifndef POINTER_SUITE_PERM_H_
#define POINTER_SUITE_PERM_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pointer_suite/rng.h"
#include "pointer_suite/sample.h"
#include "pointer_suite/seq.h"
#include "pointer_suite/validation.h"
#include "pointer_suite/vocabulary.h"

namespace pointer_suite {

// Unreachable words mixed into a PERM sequence: cycles ("kp0ms ms0jd ...
// mf0kp"), self-loops ("vu0vu") and dead ends ("gy0do").
struct DistractorConfig {
  IntRange cycles{1, 1};
  IntRange cycle_len{2, 8};
  IntRange self_loops{0, 1};
  IntRange dead_ends{0, 1};
};

struct PermConfig {
  // L: number of matches after the start word.
  IntRange chain_len{2, 12};
  DistractorConfig distractors;
  char digit = '0';
  std::shared_ptr<const GramPool> natural_pool;

  const GramPool& pool() const {
    return natural_pool ? *natural_pool : GramPool::Synthetic();
  }
  void Validate() const;
};

// Chain words W_j = c_j digit c_{j+1} for j = 0..L; W_0 is the start word.
struct PermInstance {
  std::vector<std::string> chain_nodes;
  std::vector<std::string> distractor_words;
  // Sequence order of all words (chain and distractors).
  std::vector<std::string> order;

  int chain_len() const { return static_cast<int>(chain_nodes.size()) - 2; }
  nlohmann::json ToJson() const;
};

// The input text is "<words> | <start>" with single spaces around the bar.
struct PermInput {
  Seq seq;
  std::string start;
};

inline constexpr std::string_view kPermSeparator = " | ";

// Throws Error(kMalformedRecord) when the separator is missing.
PermInput ParsePermInput(std::string_view text);
std::string RenderPermInput(const Seq& seq, std::string_view start);

// One row per chain word W_j: its position, j (matches so far), the count of
// left matches so far, and the product.
struct MulticountStep {
  std::size_t position;
  int matches;
  int left;
  int value;
};

// Throws Error(kStartNotFound) / Error(kAmbiguousMatch).
std::vector<MulticountStep> TracePerm(const Seq& seq, std::string_view start);

// "word.v" tokens in reverse chain order.
std::vector<std::string> OraclePerm(const Seq& seq, std::string_view start);
// Reverse chain order, no values.
std::vector<std::string> OraclePer(const Seq& seq, std::string_view start);
// "word.v" tokens in forward chain order.
std::vector<std::string> OraclePem(const Seq& seq, std::string_view start);

// Strips a trailing ".<digits>" annotation, if any.
std::string_view StripAnnotation(std::string_view token);

// Unique matching at each step, terminal word without matches, distinct
// tokens. When `expected_len` (L) is given, a chain that runs past it is
// reported as kTerminalReachable.
Violations ValidatePerm(const Seq& seq, std::string_view start,
                        std::optional<int> expected_len = std::nullopt);

PermInstance BuildPermInstance(const PermConfig& config, Rng& rng);

Sample GenPerm(const PermConfig& config, uint64_t seed);
Sample GenPer(const PermConfig& config, uint64_t seed);
Sample GenPem(const PermConfig& config, uint64_t seed);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_PERM_H_

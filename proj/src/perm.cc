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

#include "pointer_suite/perm.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

std::string Annotate(const std::string& token, int value) {
  return token + "." + std::to_string(value);
}

Sample GenPermFamily(TaskId task, const PermConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  PermInstance instance = BuildPermInstance(config, rng);
  std::vector<Word> words;
  words.reserve(instance.order.size());
  for (const std::string& token : instance.order) {
    words.push_back(ParseWord(token, config.pool().vocab()));
  }
  const Seq seq(std::move(words));
  const std::string start =
      Word::Chain(instance.chain_nodes[0], config.digit, instance.chain_nodes[1])
          .Render();
  if (!ValidatePerm(seq, start, instance.chain_len()).empty()) {
    throw std::logic_error("PERM layout failed validation");
  }
  std::vector<std::string> answer;
  switch (task) {
    case TaskId::kPer:
      answer = OraclePer(seq, start);
      break;
    case TaskId::kPem:
      answer = OraclePem(seq, start);
      break;
    default:
      answer = OraclePerm(seq, start);
      break;
  }
  Sample sample;
  sample.task = task;
  sample.input = RenderPermInput(seq, start);
  sample.target = JoinTokens(answer);
  sample.meta = {
      {"seed", seed},
      {"chain_len", instance.chain_len()},
      {"vocab", config.natural_pool ? "natural" : "synthetic"},
      {"instance", instance.ToJson()},
  };
  return sample;
}

}  // namespace

void PermConfig::Validate() const {
  if (chain_len.lo < 1) {
    throw Error(ErrorCode::kInvalidConfig, "perm chain_len must be >= 1");
  }
  if (digit < '0' || digit > '9') {
    throw Error(ErrorCode::kInvalidConfig, "perm digit must be 0-9");
  }
  if (distractors.cycles.lo < 0 || distractors.self_loops.lo < 0 ||
      distractors.dead_ends.lo < 0 || distractors.cycle_len.lo < 2) {
    throw Error(ErrorCode::kInvalidConfig,
                "distractor counts must be >= 0 and cycle_len >= 2");
  }
}

nlohmann::json PermInstance::ToJson() const {
  return {{"chain_nodes", chain_nodes},
          {"distractor_words", distractor_words},
          {"order", order}};
}

PermInput ParsePermInput(std::string_view text) {
  const auto bar = text.rfind(kPermSeparator);
  if (bar == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedRecord,
                "PERM input lacks the ' | ' separator");
  }
  PermInput out;
  out.seq = Seq::Parse(text.substr(0, bar));
  out.start = std::string(text.substr(bar + kPermSeparator.size()));
  if (out.start.empty() || out.start.find(' ') != std::string::npos) {
    throw Error(ErrorCode::kMalformedRecord,
                "PERM start must be a single word after ' | '");
  }
  return out;
}

std::string RenderPermInput(const Seq& seq, std::string_view start) {
  std::string out = seq.Render();
  out += kPermSeparator;
  out += start;
  return out;
}

std::vector<MulticountStep> TracePerm(const Seq& seq, std::string_view start) {
  const std::optional<std::size_t> start_pos = seq.Position(start);
  if (!start_pos.has_value()) {
    throw Error(ErrorCode::kStartNotFound,
                "'" + std::string(start) + "' not in sequence");
  }
  std::vector<MulticountStep> steps = {{*start_pos, 0, 0, 0}};
  std::vector<bool> visited(seq.size(), false);
  visited[*start_pos] = true;
  while (true) {
    const MulticountStep& last = steps.back();
    const std::vector<std::size_t> matches = seq.FindMatches(last.position);
    if (matches.empty()) break;
    if (matches.size() > 1) {
      throw Error(ErrorCode::kAmbiguousMatch,
                  std::to_string(matches.size()) + " words start with '" +
                      seq.at(last.position).suffix() + "'");
    }
    const std::size_t next = matches.front();
    if (visited[next]) {
      throw Error(ErrorCode::kAmbiguousMatch,
                  "matching cycles back to '" + seq.token(next) + "'");
    }
    visited[next] = true;
    MulticountStep step;
    step.position = next;
    step.matches = last.matches + 1;
    step.left = last.left + (next < last.position ? 1 : 0);
    step.value = step.matches * step.left;
    steps.push_back(step);
  }
  return steps;
}

std::vector<std::string> OraclePerm(const Seq& seq, std::string_view start) {
  std::vector<std::string> out = OraclePem(seq, start);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> OraclePer(const Seq& seq, std::string_view start) {
  std::vector<std::string> out;
  for (const MulticountStep& step : TracePerm(seq, start)) {
    out.push_back(seq.token(step.position));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> OraclePem(const Seq& seq, std::string_view start) {
  std::vector<std::string> out;
  for (const MulticountStep& step : TracePerm(seq, start)) {
    out.push_back(Annotate(seq.token(step.position), step.value));
  }
  return out;
}

std::string_view StripAnnotation(std::string_view token) {
  const auto dot = token.rfind('.');
  if (dot == std::string_view::npos || dot + 1 == token.size()) return token;
  const std::string_view tail = token.substr(dot + 1);
  if (!std::all_of(tail.begin(), tail.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return token;
  }
  return token.substr(0, dot);
}

Violations ValidatePerm(const Seq& seq, std::string_view start,
                        std::optional<int> expected_len) {
  Violations out;
  if (!seq.AllDistinct()) {
    out.push_back({ViolationKind::kDuplicateToken, "tokens are not distinct"});
  }
  const std::optional<std::size_t> start_pos = seq.Position(start);
  if (!start_pos.has_value()) {
    out.push_back({ViolationKind::kStartNotFound,
                   "'" + std::string(start) + "' not in sequence"});
    return out;
  }
  std::vector<bool> visited(seq.size(), false);
  std::size_t current = *start_pos;
  visited[current] = true;
  int matches_taken = 0;
  while (true) {
    const std::vector<std::size_t> matches = seq.FindMatches(current);
    if (matches.empty()) break;
    if (matches.size() > 1) {
      out.push_back({ViolationKind::kAmbiguousMatch,
                     "'" + seq.token(current) + "' has " +
                         std::to_string(matches.size()) + " matches"});
      return out;
    }
    if (expected_len.has_value() && matches_taken == *expected_len) {
      out.push_back({ViolationKind::kTerminalReachable,
                     "terminal '" + seq.token(current) + "' matches '" +
                         seq.token(matches.front()) + "'"});
      return out;
    }
    current = matches.front();
    if (visited[current]) {
      out.push_back({ViolationKind::kMatchCycle,
                     "matching revisits '" + seq.token(current) + "'"});
      return out;
    }
    visited[current] = true;
    ++matches_taken;
  }
  if (expected_len.has_value() && matches_taken != *expected_len) {
    out.push_back({ViolationKind::kTerminalReachable,
                   "chain stops after " + std::to_string(matches_taken) +
                       " matches, expected " + std::to_string(*expected_len)});
  }
  return out;
}

PermInstance BuildPermInstance(const PermConfig& config, Rng& rng) {
  const DistractorConfig& d = config.distractors;
  const int chain_len = rng.UniformInt(config.chain_len);
  const int cycles = rng.UniformInt(d.cycles);
  std::vector<int> cycle_lens;
  for (int c = 0; c < cycles; ++c) cycle_lens.push_back(rng.UniformInt(d.cycle_len));
  const int self_loops = rng.UniformInt(d.self_loops);
  const int dead_ends = rng.UniformInt(d.dead_ends);

  std::size_t grams_needed = static_cast<std::size_t>(chain_len) + 2 +
                             static_cast<std::size_t>(self_loops) +
                             2 * static_cast<std::size_t>(dead_ends);
  for (int len : cycle_lens) grams_needed += static_cast<std::size_t>(len);
  const std::vector<std::string> grams = config.pool().Draw(rng, grams_needed);
  std::size_t next = 0;

  PermInstance inst;
  inst.chain_nodes.assign(grams.begin(), grams.begin() + chain_len + 2);
  next = static_cast<std::size_t>(chain_len) + 2;
  std::vector<std::string> words;
  for (int j = 0; j <= chain_len; ++j) {
    words.push_back(Word::Chain(inst.chain_nodes[j], config.digit,
                                inst.chain_nodes[j + 1])
                        .Render());
  }
  auto add_distractor = [&](const std::string& a, const std::string& b) {
    inst.distractor_words.push_back(Word::Chain(a, config.digit, b).Render());
    words.push_back(inst.distractor_words.back());
  };
  for (int len : cycle_lens) {
    const std::size_t base = next;
    for (int i = 0; i < len; ++i) {
      add_distractor(grams[base + i], grams[base + (i + 1) % len]);
    }
    next += static_cast<std::size_t>(len);
  }
  for (int s = 0; s < self_loops; ++s, ++next) {
    add_distractor(grams[next], grams[next]);
  }
  for (int e = 0; e < dead_ends; ++e, next += 2) {
    add_distractor(grams[next], grams[next + 1]);
  }
  rng.Shuffle(std::span<std::string>(words));
  inst.order = std::move(words);
  return inst;
}

Sample GenPerm(const PermConfig& config, uint64_t seed) {
  return GenPermFamily(TaskId::kPerm, config, seed);
}

Sample GenPer(const PermConfig& config, uint64_t seed) {
  return GenPermFamily(TaskId::kPer, config, seed);
}

Sample GenPem(const PermConfig& config, uint64_t seed) {
  return GenPermFamily(TaskId::kPem, config, seed);
}

}  // namespace pointer_suite

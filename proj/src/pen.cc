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

#include "pointer_suite/pen.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

constexpr int kMaxGenerationAttempts = 16;

char DrawDigit(Rng& rng, const std::string& digits) {
  return digits[static_cast<std::size_t>(
      rng.UniformInt(0, static_cast<int64_t>(digits.size()) - 1))];
}

char DrawOtherDigit(Rng& rng, const std::string& digits, char avoid) {
  char d;
  do {
    d = DrawDigit(rng, digits);
  } while (d == avoid);
  return d;
}

void ValidateDigits(const std::string& digits, std::size_t min_distinct) {
  std::set<char> distinct(digits.begin(), digits.end());
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::kInvalidConfig, "digits must be non-empty 0-9");
  }
  if (distinct.size() < min_distinct) {
    throw Error(ErrorCode::kInvalidConfig,
                "traps need at least two distinct digits");
  }
}

std::vector<std::string> Tokens(const Seq& seq,
                                const std::vector<std::size_t>& positions) {
  std::vector<std::string> out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(seq.token(p));
  return out;
}

std::size_t RightOrThrow(const Seq& seq, std::size_t pos) {
  const auto right = seq.RightNeighbor(pos);
  if (!right.has_value()) {
    throw Error(ErrorCode::kMissingNeighbor,
                "'" + seq.token(pos) + "' has no right neighbor");
  }
  return *right;
}

}  // namespace

std::string FreeGreens::ToString() const {
  switch (mode) {
    case Mode::kMinimal:
      return "minimal";
    case Mode::kAuto:
      return "auto";
    case Mode::kFixed:
      return std::to_string(count);
  }
  return "minimal";
}

FreeGreens FreeGreens::Parse(const std::string& text) {
  if (text == "minimal") return {};
  if (text == "auto") return {Mode::kAuto, 0};
  const IntRange n = IntRange::Parse(text);
  if (n.lo != n.hi || n.lo < 0) {
    throw Error(ErrorCode::kInvalidConfig, "bad free_greens '" + text + "'");
  }
  return {Mode::kFixed, n.lo};
}

void PenConfig::Validate() const {
  if (chain_len.lo < 2) {
    throw Error(ErrorCode::kInvalidConfig, "pen chain_len must be >= 2");
  }
  ValidateDigits(digits, traps ? 2 : 1);
}

void CopyConfig::Validate() const {
  if (length.lo < 1) {
    throw Error(ErrorCode::kInvalidConfig, "copy length must be >= 1");
  }
  ValidateDigits(digits, 1);
}

Word PenInstance::ChainGreen(int j) const {
  if (j == 0) return Word::Bare(green_nodes[0]);
  return Word::Chain(green_nodes[j - 1], green_digits[j - 1], green_nodes[j]);
}

Word PenInstance::TrueYellow(int i) const {
  if (i == 0) return Word::Bare(yellow_nodes[0]);
  return Word::Chain(yellow_nodes[i - 1], yellow_digits[i - 1], yellow_nodes[i]);
}

Word PenInstance::Doppelganger(int i) const {
  return Word::Chain(yellow_nodes[i - 1], doppelganger_digits[i - 1],
                     yellow_nodes[i]);
}

Word PenInstance::FreeGreen(int k) const {
  return Word::Chain(free_nodes[k], free_digits[k], free_nodes[k + 1]);
}

Word PenInstance::Filler(int e) const {
  return Word::Chain(filler_nodes[2 * e], filler_digits[e],
                     filler_nodes[2 * e + 1]);
}

std::vector<Word> PenInstance::LayOut() const {
  const int chain = m();
  std::vector<int> yellow_at_green(chain + 1, 0);
  for (int i = 1; i <= chain; ++i) yellow_at_green[yellow_host[i - 1]] = i;

  std::vector<Word> words;
  words.reserve(2 * placement.size());
  for (int id : placement) {
    if (id <= chain) {
      words.push_back(ChainGreen(id));
      words.push_back(TrueYellow(yellow_at_green[id]));
    } else {
      const int k = id - chain - 1;
      words.push_back(FreeGreen(k));
      const int neighbor = free_neighbor[k];
      words.push_back(neighbor > 0 ? Doppelganger(neighbor)
                                   : Filler(-neighbor - 1));
    }
  }
  return words;
}

nlohmann::json PenInstance::ToJson() const {
  nlohmann::json out;
  out["green_nodes"] = green_nodes;
  out["green_digits"] = green_digits;
  out["yellow_nodes"] = yellow_nodes;
  out["yellow_digits"] = yellow_digits;
  out["doppelganger_digits"] = doppelganger_digits;
  out["free_nodes"] = free_nodes;
  out["free_digits"] = free_digits;
  out["filler_nodes"] = filler_nodes;
  out["filler_digits"] = filler_digits;
  out["yellow_host"] = yellow_host;
  out["free_neighbor"] = free_neighbor;
  out["placement"] = placement;
  return out;
}

PenInstance BuildPenInstance(const PenConfig& config, Rng& rng) {
  const int m = rng.UniformInt(config.chain_len);
  int free_count = m;
  switch (config.free_greens.mode) {
    case FreeGreens::Mode::kMinimal:
      break;
    case FreeGreens::Mode::kAuto:
      free_count = m + static_cast<int>(rng.UniformInt(1, m));
      break;
    case FreeGreens::Mode::kFixed:
      free_count = config.free_greens.count;
      break;
  }
  const int hosts = config.traps ? m : 0;
  if (free_count < hosts) {
    throw Error(ErrorCode::kConfigInfeasible,
                "free_greens " + std::to_string(free_count) +
                    " cannot host " + std::to_string(hosts) + " doppelgangers");
  }
  const int extras = free_count - hosts;
  const std::size_t gram_count = 2 * static_cast<std::size_t>(m + 1) +
                                 (free_count > 0 ? free_count + 1 : 0) +
                                 2 * static_cast<std::size_t>(extras);
  std::vector<std::string> grams = config.pool().Draw(rng, gram_count);

  PenInstance inst;
  auto take = [&grams, next = std::size_t{0}](int n) mutable {
    std::vector<std::string> out(grams.begin() + next, grams.begin() + next + n);
    next += n;
    return out;
  };
  inst.green_nodes = take(m + 1);
  inst.yellow_nodes = take(m + 1);
  inst.free_nodes = take(free_count > 0 ? free_count + 1 : 0);
  inst.filler_nodes = take(2 * extras);

  for (int j = 0; j < m; ++j) inst.green_digits += DrawDigit(rng, config.digits);
  for (int i = 0; i < m; ++i) {
    inst.yellow_digits += DrawDigit(rng, config.digits);
  }
  if (config.traps) {
    for (int i = 0; i < m; ++i) {
      inst.doppelganger_digits +=
          DrawOtherDigit(rng, config.digits, inst.yellow_digits[i]);
    }
  }
  for (int k = 0; k < free_count; ++k) {
    inst.free_digits += DrawDigit(rng, config.digits);
  }
  for (int e = 0; e < extras; ++e) {
    inst.filler_digits += DrawDigit(rng, config.digits);
  }

  inst.yellow_host.resize(m);
  std::iota(inst.yellow_host.begin(), inst.yellow_host.end(), 1);
  rng.Shuffle(std::span<int>(inst.yellow_host));

  inst.free_neighbor.reserve(free_count);
  for (int i = 1; i <= hosts; ++i) inst.free_neighbor.push_back(i);
  for (int e = 0; e < extras; ++e) inst.free_neighbor.push_back(-(e + 1));
  rng.Shuffle(std::span<int>(inst.free_neighbor));

  std::vector<int> rest(m + free_count);
  std::iota(rest.begin(), rest.end(), 1);
  rng.Shuffle(std::span<int>(rest));
  inst.placement.push_back(0);
  inst.placement.insert(inst.placement.end(), rest.begin(), rest.end());
  return inst;
}

std::vector<std::size_t> TracePenChain(const Seq& seq) {
  if (seq.empty()) {
    throw Error(ErrorCode::kMalformedRecord, "empty sequence");
  }
  std::vector<std::size_t> chain = {0};
  std::vector<bool> visited(seq.size(), false);
  visited[0] = true;
  std::size_t current = 0;
  while (true) {
    const std::vector<std::size_t> matches = seq.FindMatches(current);
    if (matches.empty()) break;
    if (matches.size() > 1) {
      throw Error(ErrorCode::kAmbiguousMatch,
                  std::to_string(matches.size()) + " words start with '" +
                      seq.at(current).suffix() + "'");
    }
    current = matches.front();
    if (visited[current]) {
      throw Error(ErrorCode::kAmbiguousMatch,
                  "matching cycles back to '" + seq.token(current) + "'");
    }
    visited[current] = true;
    chain.push_back(current);
  }
  return chain;
}

std::vector<std::string> OraclePen(const Seq& seq) {
  std::vector<std::string> out;
  for (std::size_t p : TracePenChain(seq)) {
    out.push_back(seq.token(RightOrThrow(seq, p)));
  }
  return out;
}

std::vector<std::string> OraclePe(const Seq& seq) {
  return Tokens(seq, TracePenChain(seq));
}

std::vector<std::string> OraclePev(const Seq& seq) {
  std::vector<std::string> out;
  for (std::size_t p : TracePenChain(seq)) {
    out.push_back(seq.token(p));
    out.push_back(seq.token(RightOrThrow(seq, p)));
  }
  return out;
}

std::vector<std::string> OracleCpy(const Seq& seq) {
  return {seq.tokens().begin(), seq.tokens().end()};
}

std::vector<std::string> OracleRcpy(const Seq& seq) {
  return {seq.tokens().rbegin(), seq.tokens().rend()};
}

PenSample GenPenFamily(TaskId task, const PenConfig& config, uint64_t seed) {
  if (task != TaskId::kPen && task != TaskId::kPe && task != TaskId::kPev) {
    throw Error(ErrorCode::kUnsupportedTask, std::string(TaskName(task)));
  }
  config.Validate();
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    PenInstance instance = BuildPenInstance(config, rng);
    const Seq seq(instance.LayOut());
    if (!ValidatePen(seq, config.traps).empty()) continue;
    std::vector<std::string> answer;
    switch (task) {
      case TaskId::kPe:
        answer = OraclePe(seq);
        break;
      case TaskId::kPev:
        answer = OraclePev(seq);
        break;
      default:
        answer = OraclePen(seq);
        break;
    }
    if (task == TaskId::kPen &&
        static_cast<int>(answer.size()) != instance.m() + 1) {
      continue;
    }
    PenSample out;
    out.sample.task = task;
    out.sample.input = seq.Render();
    out.sample.target = JoinTokens(answer);
    out.sample.meta = {
        {"seed", seed},
        {"m", instance.m()},
        {"traps", config.traps},
        {"vocab", config.natural_pool ? "natural" : "synthetic"},
        {"free_greens", static_cast<int>(instance.free_neighbor.size())},
        {"instance", instance.ToJson()},
    };
    out.instance = std::move(instance);
    return out;
  }
  throw std::logic_error("PEN layout failed validation on every attempt");
}

Sample GenPen(const PenConfig& config, uint64_t seed) {
  return GenPenFamily(TaskId::kPen, config, seed).sample;
}

Sample GenPe(const PenConfig& config, uint64_t seed) {
  return GenPenFamily(TaskId::kPe, config, seed).sample;
}

Sample GenPev(const PenConfig& config, uint64_t seed) {
  return GenPenFamily(TaskId::kPev, config, seed).sample;
}

namespace {

Sample GenCopyFamily(TaskId task, const CopyConfig& config, uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  const int n = rng.UniformInt(config.length);
  const std::vector<std::string> grams =
      config.pool().Draw(rng, 2 * static_cast<std::size_t>(n));
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (int i = 0; i < n; ++i) {
    tokens.push_back(
        Word::Chain(grams[2 * i], DrawDigit(rng, config.digits), grams[2 * i + 1])
            .Render());
  }
  Sample sample;
  sample.task = task;
  sample.input = JoinTokens(tokens);
  if (task == TaskId::kRcpy) std::reverse(tokens.begin(), tokens.end());
  sample.target = JoinTokens(tokens);
  sample.meta = {{"seed", seed}, {"length", n}};
  return sample;
}

}  // namespace

Sample GenCpy(const CopyConfig& config, uint64_t seed) {
  return GenCopyFamily(TaskId::kCpy, config, seed);
}

Sample GenRcpy(const CopyConfig& config, uint64_t seed) {
  return GenCopyFamily(TaskId::kRcpy, config, seed);
}

Violations ValidatePen(const Seq& seq, bool traps) {
  Violations out;
  const std::size_t n = seq.size();
  if (!seq.AllDistinct()) {
    out.push_back({ViolationKind::kDuplicateToken, "tokens are not distinct"});
  }
  if (n < 2) {
    out.push_back({ViolationKind::kTooShort, "fewer than two words"});
    return out;
  }
  if (!seq.at(0).is_bare() || !seq.at(1).is_bare()) {
    out.push_back({ViolationKind::kAlternation,
                   "slots 0 and 1 must hold bare start and first yellow"});
  }
  for (std::size_t p = 2; p < n; ++p) {
    if (seq.at(p).is_bare()) {
      out.push_back({ViolationKind::kAlternation,
                     "bare word '" + seq.token(p) + "' after slot 1"});
    }
  }
  if (n % 2 != 0) {
    out.push_back({ViolationKind::kAlternation, "odd sequence length"});
  }

  // (a) unique green matching.
  std::vector<std::size_t> chain = {0};
  std::vector<bool> on_chain(n, false);
  on_chain[0] = true;
  for (std::size_t current = 0;;) {
    const std::vector<std::size_t> matches = seq.FindMatches(current);
    if (matches.empty()) break;
    if (matches.size() > 1) {
      out.push_back({ViolationKind::kAmbiguousMatch,
                     "'" + seq.token(current) + "' has " +
                         std::to_string(matches.size()) + " matches"});
      break;
    }
    current = matches.front();
    if (on_chain[current]) {
      out.push_back({ViolationKind::kMatchCycle,
                     "matching revisits '" + seq.token(current) + "'"});
      break;
    }
    on_chain[current] = true;
    chain.push_back(current);
  }
  const std::size_t m = chain.size() - 1;

  // (c) chain greens at even slots, (d) length.
  for (std::size_t p : chain) {
    if (p % 2 != 0) {
      out.push_back({ViolationKind::kAlternation,
                     "chain word '" + seq.token(p) + "' at odd slot"});
    }
  }
  if (n < 2 * (m + 1)) {
    out.push_back({ViolationKind::kTooShort,
                   "length " + std::to_string(n) + " < 2(m+1) = " +
                       std::to_string(2 * (m + 1))});
  }

  // (b) yellow chain and doppelgangers.
  std::vector<std::size_t> yellows;
  std::vector<bool> is_yellow(n, false);
  for (std::size_t p : chain) {
    const auto right = seq.RightNeighbor(p);
    if (!right.has_value()) {
      out.push_back({ViolationKind::kMissingNeighbor,
                     "'" + seq.token(p) + "' has no right neighbor"});
      continue;
    }
    yellows.push_back(*right);
    is_yellow[*right] = true;
  }
  if (yellows.size() == chain.size()) {
    std::vector<bool> seen(n, false);
    std::size_t current = yellows.front();
    std::size_t visited = 0;
    while (true) {
      seen[current] = true;
      ++visited;
      const std::vector<std::size_t> sharers = seq.FindMatches(current);
      std::vector<std::size_t> next;
      for (std::size_t s : sharers) {
        if (is_yellow[s] && !seen[s]) next.push_back(s);
      }
      if (next.empty()) {
        if (!sharers.empty()) {
          out.push_back({ViolationKind::kTerminalYellowMatched,
                         "terminal yellow '" + seq.token(current) +
                             "' has matches"});
        }
        break;
      }
      if (next.size() > 1) {
        out.push_back({ViolationKind::kExtraPrefixSharer,
                       "several true yellows follow '" + seq.token(current) +
                           "'"});
        break;
      }
      const std::size_t expected = traps ? 2 : 1;
      if (sharers.size() < expected) {
        out.push_back({ViolationKind::kMissingDoppelganger,
                       "'" + seq.token(current) + "' lacks a doppelganger"});
      } else if (sharers.size() > expected) {
        out.push_back({ViolationKind::kExtraPrefixSharer,
                       std::to_string(sharers.size()) + " words start with '" +
                           seq.at(current).suffix() + "'"});
      } else if (traps) {
        const std::size_t twin =
            sharers[0] == next.front() ? sharers[1] : sharers[0];
        const Word& truth = seq.at(next.front());
        const Word& dopp = seq.at(twin);
        const bool shape_ok = dopp.suffix() == truth.suffix() &&
                              dopp.digit() != truth.digit();
        const bool host_ok = twin % 2 == 1 && !on_chain[twin - 1];
        if (!shape_ok || !host_ok) {
          out.push_back({ViolationKind::kDoppelgangerMisplaced,
                         "'" + seq.token(twin) + "' is not a doppelganger of '" +
                             seq.token(next.front()) + "' beside a free green"});
        }
      }
      current = next.front();
    }
    if (visited != yellows.size()) {
      out.push_back({ViolationKind::kYellowChainBroken,
                     "yellow chain covers " + std::to_string(visited) + " of " +
                         std::to_string(yellows.size()) + " yellows"});
    }
  }

  // Free greens form one matching chain of their own.
  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < n; p += 2) {
    if (!on_chain[p]) free.push_back(p);
  }
  if (!free.empty()) {
    std::vector<bool> is_free(n, false);
    for (std::size_t p : free) is_free[p] = true;
    std::vector<int> in_degree(n, 0);
    bool broken = false;
    for (std::size_t p : free) {
      const std::vector<std::size_t> next = seq.FindMatches(p);
      if (next.size() > 1 || (next.size() == 1 && !is_free[next.front()])) {
        broken = true;
        continue;
      }
      if (next.size() == 1) ++in_degree[next.front()];
    }
    const auto heads = std::count_if(free.begin(), free.end(),
                                     [&](std::size_t p) { return in_degree[p] == 0; });
    if (broken || heads != 1) {
      out.push_back({ViolationKind::kFreeChainBroken,
                     "free greens do not form a single matching chain"});
    }
  }
  return out;
}

}  // namespace pointer_suite

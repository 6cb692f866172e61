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

#include "pointer_suite/seq.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pointer_suite/error.h"

namespace pointer_suite {

Seq::Seq(std::vector<Word> words) : words_(std::move(words)) {
  tokens_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    tokens_.push_back(words_[i].Render());
    position_.emplace(tokens_.back(), i);
    by_prefix_[words_[i].prefix()].push_back(i);
  }
}

Seq Seq::Parse(std::string_view text, std::optional<Vocab> vocab) {
  std::vector<std::string> raw = SplitTokens(text);
  if (!vocab.has_value()) {
    vocab = Vocab::kSynthetic;
    if (!raw.empty()) {
      const std::string& first = raw.front();
      const auto digit = first.find_first_of("0123456789");
      const std::size_t head = digit == std::string::npos ? first.size() : digit;
      if (head > 2) vocab = Vocab::kNatural;
    }
  }
  std::vector<Word> words;
  words.reserve(raw.size());
  for (const std::string& token : raw) words.push_back(ParseWord(token, *vocab));
  return Seq(std::move(words));
}

std::optional<std::size_t> Seq::Position(std::string_view token) const {
  const auto it = position_.find(std::string(token));
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> Seq::WithPrefix(const std::string& gram) const {
  const auto it = by_prefix_.find(gram);
  if (it == by_prefix_.end()) return {};
  return it->second;
}

std::vector<std::size_t> Seq::FindMatches(std::size_t pos) const {
  std::vector<std::size_t> out;
  for (std::size_t p : WithPrefix(words_.at(pos).suffix())) {
    if (p != pos) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> Seq::FindMatches(const Word& word) const {
  const std::optional<std::size_t> self = Position(word.Render());
  std::vector<std::size_t> out;
  for (std::size_t p : WithPrefix(word.suffix())) {
    if (!self.has_value() || p != *self) out.push_back(p);
  }
  return out;
}

std::optional<std::size_t> Seq::LeftNeighbor(std::size_t pos) const {
  if (pos == 0 || pos >= words_.size()) return std::nullopt;
  return pos - 1;
}

std::optional<std::size_t> Seq::RightNeighbor(std::size_t pos) const {
  if (pos + 1 >= words_.size()) return std::nullopt;
  return pos + 1;
}

bool Seq::AllDistinct() const { return position_.size() == tokens_.size(); }

std::string Seq::Render() const { return JoinTokens(tokens_); }

std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> SplitTokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace pointer_suite

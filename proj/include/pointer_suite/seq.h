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

#ifndef POINTER_SUITE_SEQ_H_
#define POINTER_SUITE_SEQ_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pointer_suite/word.h"

namespace pointer_suite {

// An ordered word sequence with prefix and position indexes. Positions are
// 0-based. Duplicate tokens are representable (validators need to see them);
// Position() then reports the first occurrence.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<Word> words);

  // Splits on single spaces. The vocabulary is detected from the first token
  // unless given explicitly.
  static Seq Parse(std::string_view text,
                   std::optional<Vocab> vocab = std::nullopt);

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const Word& at(std::size_t pos) const { return words_.at(pos); }
  const std::string& token(std::size_t pos) const { return tokens_.at(pos); }
  std::span<const std::string> tokens() const { return tokens_; }
  std::span<const Word> words() const { return words_; }

  std::optional<std::size_t> Position(std::string_view token) const;

  // Ascending positions whose prefix equals `gram`.
  std::span<const std::size_t> WithPrefix(const std::string& gram) const;

  // Every position p != pos with prefix(seq[p]) == suffix(seq[pos]).
  std::vector<std::size_t> FindMatches(std::size_t pos) const;
  // As above for a word that may be absent from the sequence (the designated
  // start word of PERM, for instance). Its own position, if any, is excluded.
  std::vector<std::size_t> FindMatches(const Word& word) const;

  std::optional<std::size_t> LeftNeighbor(std::size_t pos) const;
  std::optional<std::size_t> RightNeighbor(std::size_t pos) const;

  bool AllDistinct() const;
  std::string Render() const;

 private:
  std::vector<Word> words_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> position_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_prefix_;
};

// Space-joined rendering helpers shared by the task modules.
std::string JoinTokens(std::span<const std::string> tokens,
                       std::string_view sep = " ");
std::vector<std::string> SplitTokens(std::string_view text);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_SEQ_H_

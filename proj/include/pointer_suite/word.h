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

#ifndef POINTER_SUITE_WORD_H_
#define POINTER_SUITE_WORD_H_

#include <optional>
#include <string>
#include <string_view>

namespace pointer_suite {

// Synthetic words use two-letter grams ("ab", "ab4fq"); natural words use
// lowercase dictionary words of three or more letters ("cat", "cat4dog").
enum class Vocab { kSynthetic, kNatural };

bool IsTwoGram(std::string_view text);
bool IsNaturalGram(std::string_view text);

// A sequence token. Matching only looks at the first and last gram: a word
// matches another when its suffix equals the other's prefix.
class Word {
 public:
  enum class Kind { kBare, kChain, kNaturalChain };

  static Word Bare(std::string gram);
  // Kind is kChain for two-letter grams and kNaturalChain otherwise.
  static Word Chain(std::string prefix, char digit, std::string suffix);

  Kind kind() const { return kind_; }
  bool is_bare() const { return kind_ == Kind::kBare; }
  // For bare words prefix() == suffix() == the gram itself.
  const std::string& prefix() const { return prefix_; }
  const std::string& suffix() const { return suffix_; }
  std::optional<char> digit() const;

  std::string Render() const;

  bool operator==(const Word& other) const = default;

 private:
  Word(Kind kind, std::string prefix, char digit, std::string suffix)
      : kind_(kind),
        prefix_(std::move(prefix)),
        suffix_(std::move(suffix)),
        digit_(digit) {}

  Kind kind_;
  std::string prefix_;
  std::string suffix_;
  char digit_;
};

// Throws Error(kMalformedToken) on any length or character-class violation.
Word ParseWord(std::string_view token, Vocab vocab = Vocab::kSynthetic);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_WORD_H_

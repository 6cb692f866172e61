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

#include "pointer_suite/word.h"

#include <algorithm>
#include <string>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool AllLower(std::string_view text) {
  return std::all_of(text.begin(), text.end(), IsLower);
}

[[noreturn]] void Malformed(std::string_view token, std::string_view why) {
  throw Error(ErrorCode::kMalformedToken,
              "'" + std::string(token) + "': " + std::string(why));
}

}  // namespace

bool IsTwoGram(std::string_view text) {
  return text.size() == 2 && AllLower(text);
}

bool IsNaturalGram(std::string_view text) {
  return text.size() >= 3 && AllLower(text);
}

Word Word::Bare(std::string gram) {
  std::string suffix = gram;
  return Word(Kind::kBare, std::move(gram), '\0', std::move(suffix));
}

Word Word::Chain(std::string prefix, char digit, std::string suffix) {
  const Kind kind = prefix.size() == 2 && suffix.size() == 2
                        ? Kind::kChain
                        : Kind::kNaturalChain;
  return Word(kind, std::move(prefix), digit, std::move(suffix));
}

std::optional<char> Word::digit() const {
  if (kind_ == Kind::kBare) return std::nullopt;
  return digit_;
}

std::string Word::Render() const {
  if (kind_ == Kind::kBare) return prefix_;
  std::string out;
  out.reserve(prefix_.size() + 1 + suffix_.size());
  out += prefix_;
  out += digit_;
  out += suffix_;
  return out;
}

Word ParseWord(std::string_view token, Vocab vocab) {
  if (token.empty()) Malformed(token, "empty token");
  const auto digit_at = std::find_if(token.begin(), token.end(), IsDigit);
  if (digit_at == token.end()) {
    const bool ok = vocab == Vocab::kSynthetic ? IsTwoGram(token)
                                               : IsNaturalGram(token);
    if (!ok) {
      Malformed(token, vocab == Vocab::kSynthetic
                           ? "bare word must be two lowercase letters"
                           : "bare word must be three or more lowercase letters");
    }
    return Word::Bare(std::string(token));
  }
  const auto split = static_cast<std::size_t>(digit_at - token.begin());
  const std::string_view prefix = token.substr(0, split);
  const std::string_view suffix = token.substr(split + 1);
  const bool ok = vocab == Vocab::kSynthetic
                      ? IsTwoGram(prefix) && IsTwoGram(suffix)
                      : IsNaturalGram(prefix) && IsNaturalGram(suffix);
  if (!ok) {
    Malformed(token, vocab == Vocab::kSynthetic
                         ? "chain word must be letter-letter-digit-letter-letter"
                         : "chain word must be word-digit-word");
  }
  return Word::Chain(std::string(prefix), *digit_at, std::string(suffix));
}

}  // namespace pointer_suite

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

#ifndef POINTER_SUITE_VOCABULARY_H_
#define POINTER_SUITE_VOCABULARY_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pointer_suite/rng.h"
#include "pointer_suite/word.h"

namespace pointer_suite {

// The set of grams a generator may place at word ends: the 676 two-letter
// grams, or a user-supplied list of natural words.
class GramPool {
 public:
  static const GramPool& Synthetic();
  // Throws Error(kInvalidConfig) for words that are not lowercase, shorter
  // than three letters, or repeated.
  static GramPool FromWords(std::vector<std::string> words);
  // One word per line; blank lines ignored.
  static GramPool Load(const std::filesystem::path& path);

  Vocab vocab() const { return vocab_; }
  std::size_t size() const { return grams_.size(); }
  const std::vector<std::string>& grams() const { return grams_; }

  // `count` distinct grams in random order. Throws Error(kConfigInfeasible)
  // when the pool is too small.
  std::vector<std::string> Draw(Rng& rng, std::size_t count) const;

 private:
  GramPool(Vocab vocab, std::vector<std::string> grams)
      : vocab_(vocab), grams_(std::move(grams)) {}

  Vocab vocab_;
  std::vector<std::string> grams_;
};

}  // namespace pointer_suite

#endif  // POINTER_SUITE_VOCABULARY_H_

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

#include "pointer_suite/vocabulary.h"

#include <fstream>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "pointer_suite/error.h"

namespace pointer_suite {

const GramPool& GramPool::Synthetic() {
  static const GramPool* pool = [] {
    std::vector<std::string> grams;
    grams.reserve(26 * 26);
    for (char a = 'a'; a <= 'z'; ++a) {
      for (char b = 'a'; b <= 'z'; ++b) grams.push_back({a, b});
    }
    return new GramPool(Vocab::kSynthetic, std::move(grams));
  }();
  return *pool;
}

GramPool GramPool::FromWords(std::vector<std::string> words) {
  std::set<std::string> seen;
  for (const std::string& word : words) {
    if (!IsNaturalGram(word)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "word list entry '" + word +
                      "' must be three or more lowercase letters");
    }
    if (!seen.insert(word).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "word list entry '" + word + "' repeated");
    }
  }
  return GramPool(Vocab::kNatural, std::move(words));
}

GramPool GramPool::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) words.push_back(line);
  }
  return FromWords(std::move(words));
}

std::vector<std::string> GramPool::Draw(Rng& rng, std::size_t count) const {
  if (count > grams_.size()) {
    throw Error(ErrorCode::kConfigInfeasible,
                "need " + std::to_string(count) + " distinct grams, pool has " +
                    std::to_string(grams_.size()));
  }
  // Partial Fisher-Yates over an index array.
  std::vector<std::size_t> index(grams_.size());
  std::iota(index.begin(), index.end(), 0);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(
        rng.UniformInt(static_cast<int64_t>(i),
                       static_cast<int64_t>(index.size()) - 1));
    std::swap(index[i], index[j]);
    out.push_back(grams_[index[i]]);
  }
  return out;
}

}  // namespace pointer_suite

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

#ifndef POINTER_SUITE_RNG_H_
#define POINTER_SUITE_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>

namespace pointer_suite {

// SplitMix64 finalizer applied to master + (index + 1) * 0x9e3779b97f4a7c15.
// Pure; distinct indices give independent mt19937_64 streams.
uint64_t DeriveSeed(uint64_t master, uint64_t index);

// Inclusive integer range, written "lo-hi" or "n" in configs.
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool operator==(const IntRange&) const = default;
  std::string ToString() const;
  // Throws Error(kInvalidConfig).
  static IntRange Parse(const std::string& text);
};

// Thin wrapper over std::mt19937_64. The engine's output sequence is fixed by
// the standard; the distributions here are written out so generated data is
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform on [lo, hi]; rejection sampling, no modulo bias.
  int64_t UniformInt(int64_t lo, int64_t hi);
  int UniformInt(IntRange range) {
    return static_cast<int>(UniformInt(range.lo, range.hi));
  }
  // Uniform on [0, 1) with 53 random bits.
  double UniformUnit() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          UniformInt(0, static_cast<int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Sattolo's algorithm: a uniformly random single-cycle permutation, so no
  // element stays in place.
  template <typename T>
  void CyclicShuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          UniformInt(0, static_cast<int64_t>(i) - 2));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pointer_suite

#endif  // POINTER_SUITE_RNG_H_

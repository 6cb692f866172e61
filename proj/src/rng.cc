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

#include "pointer_suite/rng.h"

#include <charconv>
#include <limits>
#include <string>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

bool ParseInt(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

uint64_t DeriveSeed(uint64_t master, uint64_t index) {
  uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string IntRange::ToString() const {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + "-" + std::to_string(hi);
}

IntRange IntRange::Parse(const std::string& text) {
  IntRange range;
  const auto dash = text.find('-', 1);
  bool ok;
  if (dash == std::string::npos) {
    ok = ParseInt(text, range.lo);
    range.hi = range.lo;
  } else {
    ok = ParseInt(std::string_view(text).substr(0, dash), range.lo) &&
         ParseInt(std::string_view(text).substr(dash + 1), range.hi);
  }
  if (!ok || range.lo > range.hi) {
    throw Error(ErrorCode::kInvalidConfig, "bad range '" + text + "'");
  }
  return range;
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(Next());  // full 64-bit range
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % span;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<int64_t>(x % span);
}

}  // namespace pointer_suite

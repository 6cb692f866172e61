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

#ifndef POINTER_SUITE_PEN_H_
#define POINTER_SUITE_PEN_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "pointer_suite/rng.h"
#include "pointer_suite/sample.h"
#include "pointer_suite/seq.h"
#include "pointer_suite/validation.h"
#include "pointer_suite/vocabulary.h"

namespace pointer_suite {

// How many free (off-chain) green words a PEN sequence carries.
//   minimal: m, one host per doppelganger (fillers stand in without traps)
//   auto:    m plus 1..m extras whose right neighbors are inert fillers
//   fixed:   exactly `count`; must be >= m when traps are on
struct FreeGreens {
  enum class Mode { kMinimal, kAuto, kFixed };
  Mode mode = Mode::kMinimal;
  int count = 0;

  std::string ToString() const;
  static FreeGreens Parse(const std::string& text);
};

struct PenConfig {
  // m: number of matched chain words after the start word.
  IntRange chain_len{10, 15};
  std::string digits = "0123456789";
  bool traps = true;
  FreeGreens free_greens;
  // Null selects the synthetic two-letter pool.
  std::shared_ptr<const GramPool> natural_pool;

  const GramPool& pool() const {
    return natural_pool ? *natural_pool : GramPool::Synthetic();
  }
  // Throws Error(kInvalidConfig).
  void Validate() const;
};

// Shared by CPY and RCPY.
struct CopyConfig {
  IntRange length{5, 20};
  std::string digits = "0123456789";
  std::shared_ptr<const GramPool> natural_pool;

  const GramPool& pool() const {
    return natural_pool ? *natural_pool : GramPool::Synthetic();
  }
  void Validate() const;
};

// The latent plan behind a PEN sequence. With m = chain length:
//   chain greens  G_0 = g_0 (bare), G_j = g_{j-1} e_j g_j
//   true yellows  Y_0 = w_0 (bare), Y_i = w_{i-1} d_i w_i
//   doppelgangers Y'_i = w_{i-1} d'_i w_i, d'_i != d_i
//   free greens   F_k = u_k f_k u_{k+1}
//   fillers       Z_e = z_{2e} c_e z_{2e+1}
// Y_i sits right of G_{yellow_host[i-1]}. Free green k carries Y'_i when
// free_neighbor[k] = i > 0, or filler e when free_neighbor[k] = -(e + 1).
struct PenInstance {
  std::vector<std::string> green_nodes;
  std::string green_digits;
  std::vector<std::string> yellow_nodes;
  std::string yellow_digits;
  std::string doppelganger_digits;
  std::vector<std::string> free_nodes;
  std::string free_digits;
  std::vector<std::string> filler_nodes;
  std::string filler_digits;
  std::vector<int> yellow_host;
  std::vector<int> free_neighbor;
  // Green ids in slot-pair order; chain green j is j, free green k is m+1+k.
  std::vector<int> placement;

  int m() const { return static_cast<int>(green_nodes.size()) - 1; }
  bool traps() const { return !doppelganger_digits.empty(); }

  Word ChainGreen(int j) const;
  Word TrueYellow(int i) const;
  Word Doppelganger(int i) const;
  Word FreeGreen(int k) const;
  Word Filler(int e) const;

  // Slot order: green, yellow, green, yellow, ...
  std::vector<Word> LayOut() const;
  nlohmann::json ToJson() const;
};

// Throws Error(kConfigInfeasible) when the gram pool cannot supply enough
// distinct grams.
PenInstance BuildPenInstance(const PenConfig& config, Rng& rng);

struct PenSample {
  Sample sample;
  PenInstance instance;
};

// PEN, PE and PEV share one generator; they differ only in the target.
PenSample GenPenFamily(TaskId task, const PenConfig& config, uint64_t seed);
Sample GenPen(const PenConfig& config, uint64_t seed);
Sample GenPe(const PenConfig& config, uint64_t seed);
Sample GenPev(const PenConfig& config, uint64_t seed);
Sample GenCpy(const CopyConfig& config, uint64_t seed);
Sample GenRcpy(const CopyConfig& config, uint64_t seed);

// Positions of the matched green words, start word (slot 0) first. Throws
// Error(kAmbiguousMatch) when any step has two or more candidates or the
// matching revisits a word.
std::vector<std::size_t> TracePenChain(const Seq& seq);

// Throw Error(kAmbiguousMatch) / Error(kMissingNeighbor).
std::vector<std::string> OraclePen(const Seq& seq);
std::vector<std::string> OraclePe(const Seq& seq);
std::vector<std::string> OraclePev(const Seq& seq);
std::vector<std::string> OracleCpy(const Seq& seq);
std::vector<std::string> OracleRcpy(const Seq& seq);

// Structural checks on a PEN surface sequence: unique green matching,
// yellow chain with one doppelganger per non-terminal yellow (none when
// traps are off), green/yellow alternation, length >= 2(m+1), distinct
// tokens, and a single free green chain.
Violations ValidatePen(const Seq& seq, bool traps = true);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_PEN_H_

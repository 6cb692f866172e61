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

#ifndef POINTER_SUITE_METRICS_H_
#define POINTER_SUITE_METRICS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pointer_suite/sample.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {

// Tokens of the last line that starts, case-insensitively, with "Answer:".
// Surrounding quotes and a trailing period are removed. Throws
// Error(kNoAnswerLine).
std::vector<std::string> ExtractAnswer(std::string_view transcript);

// Prediction files hold one transcript per line, either as a JSON object
// {"prediction": "..."} or as raw text with "\n", "\t" and "\\" escaped.
std::string DecodePredictionLine(std::string_view line);
std::vector<std::string> ReadPredictions(std::istream& in);
// Throws Error(kIoFailure).
std::vector<std::string> ReadPredictionsFile(const std::filesystem::path& path);

// 1 iff the token lists are identical.
int TaskAccuracy(std::span<const std::string> pred,
                 std::span<const std::string> gold);

// Fraction of consecutive pairs (p, q) where q = right(match(left(p))) and
// the match is unique. Zero for predictions with fewer than two tokens.
double PenMatchAccuracy(std::span<const std::string> pred, const Seq& input);
// 1 iff the last predicted token's left neighbor has no match.
int PenTerminationAccuracy(std::span<const std::string> pred, const Seq& input);

// Reverse-order chains, ".v" annotations ignored. A step (p_j, p_{j+1}) is
// correct when the unique match of p_{j+1} is p_j.
double PermMatchAccuracy(std::span<const std::string> pred, const Seq& input);
// 1 iff the first predicted token is in the input and has no match.
int PermTerminationAccuracy(std::span<const std::string> pred,
                            const Seq& input);

struct SampleScore {
  bool extracted = false;
  int task_ok = 0;
  // Only the PEN and PERM/PER answers have a match structure to score.
  std::optional<double> match_frac;
  std::optional<int> term_ok;
};

struct EvalReport {
  std::size_t n = 0;
  std::size_t extraction_failures = 0;
  // Means over extracted samples; the optional ones are absent when no
  // extracted sample carries the metric.
  double task_acc = 0.0;
  std::optional<double> match_acc;
  std::optional<double> term_acc;
  std::vector<SampleScore> per_sample;

  nlohmann::ordered_json ToJson() const;
  std::string ToTable() const;
};

SampleScore ScoreSample(const Sample& gold, std::string_view transcript);

// Means are accumulated in index order, so the serial and parallel paths
// give bit-identical reports.
EvalReport Aggregate(std::vector<SampleScore> scores);

// Throws Error(kLengthMismatch) when the two lists differ in length. With a
// task filter, gold samples of other tasks are skipped.
EvalReport EvaluateSerial(std::span<const Sample> gold,
                          std::span<const std::string> predictions,
                          std::optional<TaskId> task = std::nullopt);
EvalReport EvaluateParallel(std::span<const Sample> gold,
                            std::span<const std::string> predictions,
                            std::optional<TaskId> task = std::nullopt);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_METRICS_H_

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

#include "pointer_suite/metrics.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "pointer_suite/error.h"
#include "pointer_suite/perm.h"

namespace pointer_suite {
namespace {

constexpr std::string_view kAnswerTag = "answer:";

std::string_view TrimView(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool StartsWithAnswerTag(std::string_view line) {
  if (line.size() < kAnswerTag.size()) return false;
  for (std::size_t i = 0; i < kAnswerTag.size(); ++i) {
    const char c = line[i];
    const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    if (lower != kAnswerTag[i]) return false;
  }
  return true;
}

std::string_view StripDecoration(std::string_view s) {
  s = TrimView(s);
  if (!s.empty() && s.back() == '.') s = TrimView(s.substr(0, s.size() - 1));
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
      s.back() == s.front()) {
    s = TrimView(s.substr(1, s.size() - 2));
  }
  if (!s.empty() && s.back() == '.') s = TrimView(s.substr(0, s.size() - 1));
  return s;
}

bool IsPenScored(TaskId t) { return t == TaskId::kPen; }
bool IsPermScored(TaskId t) { return t == TaskId::kPerm || t == TaskId::kPer; }

std::vector<std::string> StripAll(std::span<const std::string> pred) {
  std::vector<std::string> out;
  out.reserve(pred.size());
  for (const std::string& t : pred) out.emplace_back(StripAnnotation(t));
  return out;
}

std::optional<std::size_t> UniqueMatch(const Seq& seq, std::size_t pos) {
  const std::vector<std::size_t> m = seq.FindMatches(pos);
  if (m.size() != 1) return std::nullopt;
  return m[0];
}

std::string FormatFraction(std::optional<double> v) {
  if (!v.has_value()) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

void CheckLengths(std::span<const Sample> gold,
                  std::span<const std::string> predictions) {
  if (gold.size() != predictions.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(gold.size()) + " gold samples");
  }
}

std::vector<std::size_t> SelectIndices(std::span<const Sample> gold,
                                       std::optional<TaskId> task) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!task || gold[i].task == *task) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<std::string> ExtractAnswer(std::string_view transcript) {
  std::optional<std::string_view> last;
  std::size_t begin = 0;
  while (begin <= transcript.size()) {
    std::size_t end = transcript.find('\n', begin);
    if (end == std::string_view::npos) end = transcript.size();
    const std::string_view line =
        TrimView(transcript.substr(begin, end - begin));
    if (StartsWithAnswerTag(line)) last = line.substr(kAnswerTag.size());
    begin = end + 1;
  }
  if (!last.has_value()) {
    throw Error(ErrorCode::kNoAnswerLine, "no line starts with 'Answer:'");
  }
  return SplitTokens(StripDecoration(*last));
}

std::string DecodePredictionLine(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (!line.empty() && line.front() == '{') {
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("prediction") &&
        j["prediction"].is_string()) {
      return j["prediction"].get<std::string>();
    }
  }
  std::string out;
  out.reserve(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && i + 1 < line.size()) {
      const char next = line[i + 1];
      if (next == 'n' || next == 't' || next == '\\') {
        out += next == 'n' ? '\n' : next == 't' ? '\t' : '\\';
        ++i;
        continue;
      }
    }
    out += line[i];
  }
  return out;
}

std::vector<std::string> ReadPredictions(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(DecodePredictionLine(line));
  return out;
}

std::vector<std::string> ReadPredictionsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  return ReadPredictions(in);
}

int TaskAccuracy(std::span<const std::string> pred,
                 std::span<const std::string> gold) {
  return std::equal(pred.begin(), pred.end(), gold.begin(), gold.end()) ? 1
                                                                         : 0;
}

double PenMatchAccuracy(std::span<const std::string> pred, const Seq& input) {
  if (pred.size() <= 1) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i + 1 < pred.size(); ++i) {
    const auto pos = input.Position(pred[i]);
    if (!pos) continue;
    const auto left = input.LeftNeighbor(*pos);
    if (!left) continue;
    const auto match = UniqueMatch(input, *left);
    if (!match) continue;
    const auto right = input.RightNeighbor(*match);
    if (right && input.token(*right) == pred[i + 1]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pred.size() - 1);
}

int PenTerminationAccuracy(std::span<const std::string> pred,
                           const Seq& input) {
  if (pred.empty()) return 0;
  const auto pos = input.Position(pred.back());
  if (!pos) return 0;
  const auto left = input.LeftNeighbor(*pos);
  if (!left) return 0;
  return input.FindMatches(*left).empty() ? 1 : 0;
}

double PermMatchAccuracy(std::span<const std::string> pred, const Seq& input) {
  if (pred.size() <= 1) return 0.0;
  const std::vector<std::string> words = StripAll(pred);
  std::size_t correct = 0;
  for (std::size_t j = 0; j + 1 < words.size(); ++j) {
    const auto pos = input.Position(words[j + 1]);
    if (!pos) continue;
    const auto match = UniqueMatch(input, *pos);
    if (match && input.token(*match) == words[j]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pred.size() - 1);
}

int PermTerminationAccuracy(std::span<const std::string> pred,
                            const Seq& input) {
  if (pred.empty()) return 0;
  const auto pos = input.Position(StripAnnotation(pred.front()));
  if (!pos) return 0;
  return input.FindMatches(*pos).empty() ? 1 : 0;
}

SampleScore ScoreSample(const Sample& gold, std::string_view transcript) {
  SampleScore score;
  std::vector<std::string> pred;
  try {
    pred = ExtractAnswer(transcript);
  } catch (const Error&) {
    return score;
  }
  score.extracted = true;
  score.task_ok = TaskAccuracy(pred, SplitTokens(gold.target));
  if (IsPenScored(gold.task)) {
    const Seq seq = Seq::Parse(gold.input);
    score.match_frac = PenMatchAccuracy(pred, seq);
    score.term_ok = PenTerminationAccuracy(pred, seq);
  } else if (IsPermScored(gold.task)) {
    const PermInput in = ParsePermInput(gold.input);
    score.match_frac = PermMatchAccuracy(pred, in.seq);
    score.term_ok = PermTerminationAccuracy(pred, in.seq);
  }
  return score;
}

EvalReport Aggregate(std::vector<SampleScore> scores) {
  EvalReport report;
  report.n = scores.size();
  double task_sum = 0.0, match_sum = 0.0, term_sum = 0.0;
  std::size_t scored = 0, matched = 0, termed = 0;
  for (const SampleScore& s : scores) {
    if (!s.extracted) {
      ++report.extraction_failures;
      continue;
    }
    ++scored;
    task_sum += s.task_ok;
    if (s.match_frac) {
      ++matched;
      match_sum += *s.match_frac;
    }
    if (s.term_ok) {
      ++termed;
      term_sum += *s.term_ok;
    }
  }
  if (scored > 0) report.task_acc = task_sum / static_cast<double>(scored);
  if (matched > 0) report.match_acc = match_sum / static_cast<double>(matched);
  if (termed > 0) report.term_acc = term_sum / static_cast<double>(termed);
  report.per_sample = std::move(scores);
  return report;
}

EvalReport EvaluateSerial(std::span<const Sample> gold,
                          std::span<const std::string> predictions,
                          std::optional<TaskId> task) {
  CheckLengths(gold, predictions);
  const std::vector<std::size_t> idx = SelectIndices(gold, task);
  std::vector<SampleScore> scores;
  scores.reserve(idx.size());
  for (std::size_t i : idx) scores.push_back(ScoreSample(gold[i], predictions[i]));
  return Aggregate(std::move(scores));
}

EvalReport EvaluateParallel(std::span<const Sample> gold,
                            std::span<const std::string> predictions,
                            std::optional<TaskId> task) {
  CheckLengths(gold, predictions);
  const std::vector<std::size_t> idx = SelectIndices(gold, task);
  std::vector<SampleScore> scores(idx.size());
  const auto n = static_cast<int64_t>(idx.size());
#pragma omp parallel for schedule(static)
  for (int64_t k = 0; k < n; ++k) {
    scores[k] = ScoreSample(gold[idx[k]], predictions[idx[k]]);
  }
  return Aggregate(std::move(scores));
}

nlohmann::ordered_json EvalReport::ToJson() const {
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (v.has_value()) return *v;
    return nullptr;
  };
  nlohmann::ordered_json out;
  out["n"] = n;
  out["scored"] = n - extraction_failures;
  out["extraction_failures"] = extraction_failures;
  out["task_acc"] = task_acc;
  out["match_acc"] = opt(match_acc);
  out["term_acc"] = opt(term_acc);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SampleScore& s : per_sample) {
    nlohmann::ordered_json row;
    row["extracted"] = s.extracted;
    row["task_ok"] = s.task_ok;
    row["match_frac"] = opt(s.match_frac);
    row["term_ok"] = opt(s.term_ok);
    rows.push_back(std::move(row));
  }
  out["per_sample"] = std::move(rows);
  return out;
}

std::string EvalReport::ToTable() const {
  std::ostringstream out;
  out << "metric                value\n"
      << "--------------------  --------\n"
      << "samples               " << n << "\n"
      << "extraction failures   " << extraction_failures << "\n"
      << "task accuracy         " << FormatFraction(task_acc) << "\n"
      << "match accuracy        " << FormatFraction(match_acc) << "\n"
      << "termination accuracy  " << FormatFraction(term_acc) << "\n";
  return out.str();
}

}  // namespace pointer_suite

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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Expected values come from printed worked examples,
// brute-force or wide-integer oracles, and the library's own invariants.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "pointer_suite/cli.h"
#include "pointer_suite/metrics.h"
#include "pointer_suite/numeric.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/perm.h"
#include "pointer_suite/prompts.h"
#include "pointer_suite/rng.h"
#include "pointer_suite/seq.h"
#include "pointer_suite/solver.h"
#include "pointer_suite/tasks.h"

namespace pointer_suite {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later ones are counted only.
class Failures {
 public:
  void Add(const std::string& what) {
    if (count_++ == 0) first_ = what;
  }
  bool any() const { return count_ > 0; }
  std::string Summary() const {
    return std::to_string(count_) + " failure(s), first: " + first_;
  }

 private:
  int count_ = 0;
  std::string first_;
};

int RunCliArgs(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "pointer-suite");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int rc = RunCli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (rc != kExitOk) std::cerr << e.str();
  return rc;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------- 1

Verdict PenGolden() {
  const Seq seq = Seq::Parse(fixtures::kPenLong);
  std::string got;
  double best = 1e9;
  for (int i = 0; i < 50; ++i) {
    const auto t0 = Clock::now();
    got = JoinTokens(OraclePen(seq));
    best = std::min(best, Seconds(t0));
  }
  Verdict o;
  o.pass = got == fixtures::kPenLongAnswer && best < 1e-3;
  o.detail = "exact=" + std::string(got == fixtures::kPenLongAnswer ? "yes" : "no") +
             ", oracle time " + std::to_string(best * 1e6) + " us";
  return o;
}

// ---------------------------------------------------------------- 2

Verdict PermGolden() {
  Verdict o;
  int exact = 0;
  for (const auto& [in, want] :
       {std::pair{fixtures::kPermA, fixtures::kPermAAnswer},
        std::pair{fixtures::kPermB, fixtures::kPermBAnswer}}) {
    const PermInput p = ParsePermInput(in);
    exact += JoinTokens(OraclePerm(p.seq, p.start)) == want;
  }
  o.pass = exact == 2;
  o.detail = std::to_string(exact) + "/2 printed answers reproduced";
  return o;
}

// ---------------------------------------------------------------- 3

Verdict GeneratorAgreement() {
  constexpr std::size_t kPerTask = 10000;
  const auto t0 = Clock::now();
  Failures f;
  std::size_t total = 0;
  for (TaskId task : kAllTasks) {
    const auto samples =
        GenerateParallel(task, SuiteConfig{}, 20260101, 0, kPerTask);
    std::vector<int> mismatch(samples.size(), 0), violated(samples.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < samples.size(); ++i) {
      mismatch[i] = OracleTarget(task, samples[i].input) != samples[i].target;
      violated[i] = !ValidateSample(samples[i]).empty();
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (mismatch[i] || violated[i]) {
        f.Add(std::string(TaskName(task)) + " #" + std::to_string(i));
      }
    }
    total += samples.size();
  }
  const double secs = Seconds(t0);
  Verdict o;
  o.pass = !f.any() && total == kPerTask * kAllTasks.size() && secs < 120.0;
  o.detail = std::to_string(total) + " samples over 13 tasks in " +
             std::to_string(secs) + " s" + (f.any() ? "; " + f.Summary() : "");
  return o;
}

// ---------------------------------------------------------------- 4

Verdict PenStructure() {
  Failures f;
  const auto samples = GenerateParallel(TaskId::kPen, SuiteConfig{}, 4, 0, 10000);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Seq seq = Seq::Parse(samples[i].input);
    const std::vector<std::string> yellows = SplitTokens(samples[i].target);
    const std::vector<std::size_t> greens = TracePenChain(seq);
    const std::size_t m = greens.size() - 1;
    const std::string tag = "#" + std::to_string(i);
    if (seq.size() < 2 * (m + 1)) f.Add(tag + " too short");
    // Unique green matching along the chain.
    for (std::size_t j = 0; j + 1 < greens.size(); ++j) {
      const auto matches = seq.FindMatches(greens[j]);
      std::size_t green_hits = 0;
      for (std::size_t p : matches) green_hits += p % 2 == 0;
      if (green_hits != 1 || !(greens[j + 1] % 2 == 0)) {
        f.Add(tag + " green step " + std::to_string(j) + " not unique");
      }
    }
    // The true yellows link suffix-to-prefix into their own chain starting
    // at the first answer word. Each link except the terminal one must be
    // shared by exactly two words (the true successor and its doppelganger);
    // the terminal suffix starts no word at all. A word never counts as a
    // sharer of itself.
    std::string link = yellows.empty() ? std::string() : yellows[0];
    std::set<std::string> unvisited(yellows.begin(), yellows.end());
    unvisited.erase(link);
    while (!link.empty()) {
      const std::string suffix = ParseWord(link).suffix();
      std::size_t sharers = 0;
      std::string next;
      for (std::size_t p = 0; p < seq.size(); ++p) {
        const std::string& w = seq.token(p);
        if (w == link || seq.at(p).prefix() != suffix) continue;
        ++sharers;
        if (unvisited.count(w) != 0) next = w;
      }
      const std::size_t want = next.empty() ? 0 : 2;
      if (sharers != want) {
        f.Add(tag + " yellow " + link + " has " + std::to_string(sharers) +
              " sharers");
      }
      unvisited.erase(next);
      link = next;
    }
    if (!unvisited.empty()) f.Add(tag + " yellow chain does not cover answer");
    if (!ValidatePen(seq).empty()) f.Add(tag + " validator violation");
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = "10000 samples; two sharers per non-terminal yellow, none for "
             "the terminal yellow" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

// ---------------------------------------------------------------- 5

Verdict HssCorrectness() {
  Failures f;
  Rng rng(55);
  for (int i = 0; i < 1000; ++i) {
    std::vector<int64_t> v(static_cast<std::size_t>(rng.UniformInt(1, 20)));
    for (auto& x : v) x = rng.UniformInt(0, 99);
    if (OracleHss(v) != BruteForceHss(v)) f.Add("brute force instance " + std::to_string(i));
  }
  for (int i = 0; i < 10000; ++i) {
    std::vector<int64_t> v(static_cast<std::size_t>(rng.UniformInt(1, 30)));
    for (auto& x : v) x = rng.UniformInt(0, 99);
    const std::string sse = OracleSse(v);
    const std::string last = sse.substr(sse.rfind(' ') + 1);
    const std::string dp = last.substr(0, last.find(':'));
    if (dp != std::to_string(OracleHss(v))) f.Add("sse instance " + std::to_string(i));
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = "1000 brute-force and 10000 SSE comparisons" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

// ---------------------------------------------------------------- 6

std::string WideToString(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  for (; v > 0; v /= 10) s.insert(s.begin(), char('0' + int(v % 10)));
  return s;
}

Verdict MulCorrectness() {
  Failures f;
  Rng rng(66);
  for (int i = 0; i < 10000; ++i) {
    uint64_t ab[2];
    for (uint64_t& x : ab) {
      const int digits = static_cast<int>(rng.UniformInt(1, 12));
      int64_t lo = 1;
      for (int d = 1; d < digits; ++d) lo *= 10;
      x = static_cast<uint64_t>(rng.UniformInt(digits == 1 ? 0 : lo, lo * 10 - 1));
    }
    const std::string got =
        OracleMul(Decimal::FromUint(ab[0]), Decimal::FromUint(ab[1])).ToString();
    if (got != WideToString(static_cast<unsigned __int128>(ab[0]) * ab[1])) {
      f.Add(std::to_string(ab[0]) + "*" + std::to_string(ab[1]));
    }
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = "10000 pairs up to 12x12 digits vs 128-bit products" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

// ---------------------------------------------------------------- 7

Verdict ReferenceEquivalence() {
  Failures f;
  for (bool traps : {true, false}) {
    SuiteConfig cfg;
    cfg.pen.traps = traps;
    for (const Sample& s : GenerateParallel(TaskId::kPen, cfg, 777, 0, 1000)) {
      const Seq seq = Seq::Parse(s.input);
      if (RunProgram(ReferenceProgram(), seq).answer != OraclePen(seq)) {
        f.Add(std::string(traps ? "traps" : "no traps") + ": " + s.input);
      }
    }
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = "2x1000 samples (traps on and off)" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

// ---------------------------------------------------------------- 8

Verdict SingleSampleLearning() {
  const fs::path dir = fs::temp_directory_path() / "pointer_suite_accept_solve";
  int perfect = 0;
  int generalizes = 0;
  double slowest = 0.0;
  std::string per_seed;
  for (int seed = 1; seed <= 10; ++seed) {
    fs::remove_all(dir);
    const auto t0 = Clock::now();
    const int rc = RunCliArgs({"solve", "--seed", std::to_string(seed),
                               "--restarts", "200", "--steps", "5000",
                               "--holdout", "100", "--out", dir.string()});
    const double secs = Seconds(t0);
    slowest = std::max(slowest, secs);
    if (rc != kExitOk) continue;
    const auto stats = nlohmann::json::parse(Slurp(dir / "stats.json"));
    const bool ok = stats["perfect"].get<bool>();
    const double acc = stats["holdout_accuracy"].get<double>();
    perfect += ok;
    generalizes += ok && acc == 1.0;
    per_seed += " " + std::to_string(seed) + ":" + (ok ? "P" : "-") +
                (ok && acc != 1.0 ? "(holdout " + std::to_string(acc) + ")" : "");
  }
  fs::remove_all(dir);
  Verdict o;
  o.pass = perfect >= 8 && generalizes == perfect && slowest <= 600.0;
  o.detail = std::to_string(perfect) + "/10 seeds perfect, " +
             std::to_string(generalizes) + " with 100% holdout, slowest " +
             std::to_string(slowest) + " s;" + per_seed;
  return o;
}

// ---------------------------------------------------------------- 9

Verdict MetricsSelfConsistency() {
  Failures f;
  for (TaskId task : {TaskId::kPen, TaskId::kPerm}) {
    const auto gold = GenerateParallel(task, SuiteConfig{}, 99, 0, 1000);
    std::vector<std::string> preds;
    for (const Sample& s : gold) preds.push_back("Answer: " + s.target);
    const EvalReport r = EvaluateParallel(gold, preds);
    if (r.task_acc != 1.0 || r.match_acc != 1.0 || r.term_acc != 1.0) {
      f.Add(std::string(TaskName(task)) + " gold not perfect");
    }
    // A single-cycle permutation guarantees no answer stays with its own
    // sample.
    Rng rng(1234);
    rng.CyclicShuffle(std::span(preds));
    const double shuffled = EvaluateParallel(gold, preds).task_acc;
    if (shuffled != 0.0) {
      f.Add(std::string(TaskName(task)) + " shuffled task_acc " +
            std::to_string(shuffled));
    }
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = "PEN and PERM, 1000 samples each" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

// ---------------------------------------------------------------- 10

Verdict Determinism() {
  const fs::path dir = fs::temp_directory_path() / "pointer_suite_accept_gen";
  fs::remove_all(dir);
  const std::string mix =
      "pen=300,pe=100,pev=100,cpy=100,rcpy=100,perm=300,per=100,pem=100,"
      "hss=100,sse=100,mul=100,dmul=100,add=100";
  const int threads = std::max(4, omp_get_num_procs());
  struct Run {
    std::string name;
    std::vector<std::string> extra;
  };
  const std::vector<Run> runs = {
      {"a", {"--threads", "1"}},
      {"b", {"--threads", "1"}},
      {"c", {"--threads", std::to_string(threads)}},
      {"d", {"--serial"}},
  };
  bool ok = true;
  for (const Run& r : runs) {
    std::vector<std::string> args = {"gen", "--mix", mix, "--seed", "42",
                                     "--out", (dir / r.name).string()};
    args.insert(args.end(), r.extra.begin(), r.extra.end());
    ok = ok && RunCliArgs(args) == kExitOk;
  }
  for (const std::string file : {"samples.jsonl", "manifest.json"}) {
    const std::string ref = Slurp(dir / "a" / file);
    ok = ok && !ref.empty();
    for (const char* other : {"b", "c", "d"}) {
      ok = ok && Slurp(dir / other / file) == ref;
    }
  }
  fs::remove_all(dir);
  Verdict o;
  o.pass = ok;
  o.detail = "2300-sample mix; two 1-thread runs, a " + std::to_string(threads) +
             "-thread run and the serial path compared byte for byte";
  return o;
}

// ---------------------------------------------------------------- 11

Verdict PromptFidelity() {
  Failures f;
  int goldens = 0;
  for (const char* task : {"pen", "perm"}) {
    for (const char* setting : {"fewshot", "fewshot-description", "cot",
                                "fewshot-cot", "subtask-cot", "analogical-cot",
                                "code-interpreter"}) {
      const std::string name =
          std::string("prompt_") + task + "_" + setting + ".txt";
      std::string out;
      if (RunCliArgs({"prompt", "--setting", setting, "--task", task, "--seed",
                      "2026"},
                     &out) != kExitOk) {
        f.Add(name + " render failed");
        continue;
      }
      const std::string got = nlohmann::json::parse(out)["prompt"];
      const std::string want = fixtures::ReadGolden(name);
      if (want.empty() || got != want) f.Add(name + " differs");
      ++goldens;
    }
  }
  struct Printed {
    const char* golden;
    TaskId task;
    std::string (*narrate)(const Sample&);
    std::string input;
  };
  // The two PEN narration inputs are the first Example lines of the
  // corresponding printed prompt figures.
  auto first_example = [](const char* name) {
    std::istringstream in(fixtures::ReadGolden(name));
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("Example: ", 0) == 0) return line.substr(9);
    }
    return std::string();
  };
  const std::vector<Printed> printed = {
      {"narration_pen_fewshot_cot.txt", TaskId::kPen, NarratePenFewShotCot,
       first_example("printed_pen_fewshot-cot.txt")},
      {"narration_pen_subtask_cot.txt", TaskId::kPen, NarratePenSubtaskCot,
       first_example("printed_pen_subtask-cot.txt")},
      {"narration_perm_subtask_cot.txt", TaskId::kPerm, NarratePermSubtaskCot,
       std::string(fixtures::kPermA)},
      {"narration_perm_fewshot_cot.txt", TaskId::kPerm, NarratePermFewShotCot,
       std::string(fixtures::kPermB)},
  };
  for (const Printed& p : printed) {
    Sample s;
    s.task = p.task;
    s.input = p.input;
    s.target = OracleTarget(p.task, p.input);
    if (p.narrate(s) + "\n" != fixtures::ReadGolden(p.golden)) {
      f.Add(std::string(p.golden) + " differs");
    }
  }
  int extracted = 0;
  for (TaskId task : {TaskId::kPen, TaskId::kPerm}) {
    const auto narrators =
        task == TaskId::kPen
            ? std::vector<std::string (*)(const Sample&)>{NarratePenFewShotCot,
                                                          NarratePenSubtaskCot}
            : std::vector<std::string (*)(const Sample&)>{
                  NarratePermFewShotCot, NarratePermSubtaskCot};
    for (const Sample& s : GenerateParallel(task, SuiteConfig{}, 11, 0, 1000)) {
      for (auto narrate : narrators) {
        ++extracted;
        if (JoinTokens(ExtractAnswer(narrate(s))) != s.target) {
          f.Add("extraction mismatch on " + s.input);
        }
      }
    }
  }
  Verdict o;
  o.pass = !f.any();
  o.detail = std::to_string(goldens) + " pinned prompts, 4 printed narrations, " +
             std::to_string(extracted) + " narration extractions" +
             (f.any() ? "; " + f.Summary() : std::string());
  return o;
}

}  // namespace
}  // namespace pointer_suite

int main() {
  using namespace pointer_suite;
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"PEN oracle golden vector", PenGolden},
      {"PERM golden vectors", PermGolden},
      {"generator-oracle agreement", GeneratorAgreement},
      {"PEN structural invariants", PenStructure},
      {"HSS correctness", HssCorrectness},
      {"MUL correctness", MulCorrectness},
      {"reference-program equivalence", ReferenceEquivalence},
      {"single-sample learning", SingleSampleLearning},
      {"metrics self-consistency", MetricsSelfConsistency},
      {"determinism", Determinism},
      {"prompt fidelity", PromptFidelity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s  %2zu. %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, Seconds(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

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

// Serial reference paths against their OpenMP counterparts. Set
// OMP_NUM_THREADS to compare thread counts; the unit tests check that both
// sides of each pair produce identical output.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "pointer_suite/metrics.h"
#include "pointer_suite/solver.h"
#include "pointer_suite/tasks.h"

namespace pointer_suite {
namespace {

constexpr uint64_t kSeed = 20260101;

void BM_Generate(benchmark::State& state, bool parallel, TaskId task) {
  const SuiteConfig cfg;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::vector<Sample> out = parallel ? GenerateParallel(task, cfg, kSeed, 0, n)
                                       : GenerateSerial(task, cfg, kSeed, 0, n);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HillClimb(benchmark::State& state, bool parallel) {
  const Sample train = Generate(TaskId::kPen, SuiteConfig{},
                                SampleSeed(kSeed, TaskId::kPen, 0));
  SearchConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  uint64_t seed = 1;
  for (auto _ : state) {
    SearchResult r = parallel ? HillClimbParallel(train, cfg, seed)
                              : HillClimb(train, cfg, seed);
    benchmark::DoNotOptimize(r.stats.total_steps);
    ++seed;
  }
}

void BM_Evaluate(benchmark::State& state, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<Sample> gold =
      GenerateSerial(TaskId::kPerm, SuiteConfig{}, kSeed, 0, n);
  std::vector<std::string> preds;
  preds.reserve(n);
  for (const Sample& s : gold) preds.push_back("work\nAnswer: " + s.target);
  for (auto _ : state) {
    EvalReport r = parallel ? EvaluateParallel(gold, preds, std::nullopt)
                            : EvaluateSerial(gold, preds, std::nullopt);
    benchmark::DoNotOptimize(r.task_acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_Generate, pen_serial, false, TaskId::kPen)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, pen_parallel, true, TaskId::kPen)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, mul_serial, false, TaskId::kMul)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, mul_parallel, true, TaskId::kMul)->Arg(2000);
BENCHMARK_CAPTURE(BM_HillClimb, serial, false)->Arg(16);
BENCHMARK_CAPTURE(BM_HillClimb, parallel, true)->Arg(16);
BENCHMARK_CAPTURE(BM_Evaluate, serial, false)->Arg(5000);
BENCHMARK_CAPTURE(BM_Evaluate, parallel, true)->Arg(5000);

}  // namespace
}  // namespace pointer_suite

BENCHMARK_MAIN();

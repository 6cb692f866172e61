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

#include "pointer_suite/cli.h"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pointer_suite/config.h"
#include "pointer_suite/dataset.h"
#include "pointer_suite/error.h"
#include "pointer_suite/manifest.h"
#include "pointer_suite/metrics.h"
#include "pointer_suite/prompts.h"
#include "pointer_suite/solver.h"
#include "pointer_suite/tasks.h"
#include "pointer_suite/trace.h"

namespace pointer_suite {
namespace {

namespace fs = std::filesystem;

constexpr const char* kSeedEnv = "POINTER_SUITE_SEED";
constexpr const char* kManifestName = "manifest.json";
// Streams that must never collide with dataset indices of the same seed.
constexpr uint64_t kHoldoutFirstIndex = uint64_t{1} << 32;
constexpr uint64_t kShotFirstIndex = uint64_t{1} << 40;
constexpr uint64_t kSearchStream = 0x736f6c7665ULL;

// Options shared by every command that builds generator configs.
struct CommonOptions {
  std::optional<uint64_t> seed;
  std::string config_path;
  std::vector<std::string> sets;
  int threads = 0;
  bool serial = false;
};

// Everything a command needs after flags, config file and environment have
// been merged.
struct Resolved {
  SuiteConfig suite;
  SearchConfig search;
  uint64_t seed = 0;
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "Master seed (falls back to config, then $" +
                                        std::string(kSeedEnv) + ", then 0)");
  cmd->add_option("--config", o.config_path,
                  "Config file of section.key=value lines")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", o.sets, "Override one config key (key=value)");
  cmd->add_option("--threads", o.threads, "OpenMP threads (0 keeps default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--serial", o.serial, "Use the serial reference path");
}

uint64_t ParseSeedText(const std::string& where, const std::string& text) {
  std::size_t used = 0;
  uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') {
    throw Error(ErrorCode::kInvalidConfig,
                where + ": '" + text + "' is not an unsigned seed");
  }
  return value;
}

bool ApplySearchKey(SearchConfig& s, const std::string& key,
                    const std::string& value) {
  if (key == "solver.restarts") {
    s.restarts = ParseIntValue(key, value);
  } else if (key == "solver.steps") {
    s.steps = ParseIntValue(key, value);
  } else if (key == "solver.accept_equal") {
    s.accept_equal = ParseBool(key, value);
  } else if (key == "solver.polish_steps") {
    s.polish_steps = ParseIntValue(key, value);
  } else if (key == "solver.penalty") {
    try {
      s.penalty = std::stod(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidConfig, key + "=" + value + ": not a number");
    }
  } else {
    return false;
  }
  return true;
}

Resolved Resolve(const CommonOptions& o) {
  std::vector<ConfigEntry> entries;
  if (!o.config_path.empty()) entries = LoadConfigFile(o.config_path);
  for (const std::string& kv : o.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "--set '" + kv + "' is not key=value");
    }
    entries.push_back({kv.substr(0, eq), kv.substr(eq + 1), 0});
  }
  Resolved r;
  std::optional<uint64_t> config_seed;
  // Later entries win, so --set overrides the file.
  for (const ConfigEntry& e : entries) {
    if (e.key == "seed") {
      config_seed = ParseSeedText("seed", e.value);
    } else if (!ApplySuiteKey(r.suite, e.key, e.value) &&
               !ApplySearchKey(r.search, e.key, e.value)) {
      throw Error(ErrorCode::kInvalidConfig, "unknown config key '" + e.key +
                                                 "'" +
                                                 (e.line > 0 ? " (line " +
                                                                   std::to_string(e.line) + ")"
                                                             : ""));
    }
  }
  if (o.seed) {
    r.seed = *o.seed;
  } else if (config_seed) {
    r.seed = *config_seed;
  } else if (const char* env = std::getenv(kSeedEnv); env && *env) {
    r.seed = ParseSeedText(kSeedEnv, env);
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  return r;
}

TaskId RequireTask(const std::string& name) {
  const std::optional<TaskId> task = ParseTaskName(name);
  if (!task) {
    throw Error(ErrorCode::kUnsupportedTask, "unknown task '" + name + "'");
  }
  return *task;
}

DatasetFormat RequireFormat(const std::string& name) {
  const std::optional<DatasetFormat> f = ParseDatasetFormat(name);
  if (!f) {
    throw Error(ErrorCode::kInvalidConfig, "unknown format '" + name + "'");
  }
  return *f;
}

DatasetFormat FormatFor(const std::string& flag, const fs::path& path) {
  return flag.empty() ? FormatFromPath(path) : RequireFormat(flag);
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot create " + dir.string() + ": " + ec.message());
  }
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoFailure, "short write to " + path.string());
}

void Emit(const std::string& out_path, const std::string& text,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    WriteText(out_path, text);
  }
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  CommonOptions common;
  std::string task;
  std::string mix;
  std::size_t n = 0;
  std::string out_dir;
  std::string format = "jsonl";
  std::string replay;
};

// Applies a manifest's recorded request on top of `o`.
void LoadReplay(GenOptions& o) {
  std::ifstream in(o.replay, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + o.replay);
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord,
                o.replay + ": " + std::string(e.what()));
  }
  try {
    o.common.seed = m.at("master_seed").get<uint64_t>();
    o.format = m.at("format").get<std::string>();
    const std::string spec = m.at("spec").get<std::string>();
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::kMalformedRecord, "spec");
    const std::string body = spec.substr(colon + 1);
    if (spec.substr(0, colon) == "mix") {
      o.mix = body;
      o.task.clear();
    } else {
      const std::vector<MixEntry> one = ParseMixSpec(body);
      o.task = std::string(TaskName(one.at(0).task));
      o.n = one.at(0).count;
      o.mix.clear();
    }
    o.common.config_path.clear();
    std::vector<std::string> sets;
    for (const auto& [key, value] : m.at("config").items()) {
      sets.push_back(key + "=" + (value.is_string() ? value.get<std::string>()
                                                    : value.dump()));
    }
    o.common.sets.insert(o.common.sets.begin(), sets.begin(), sets.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedRecord,
                o.replay + ": " + std::string(e.what()));
  }
}

int RunGen(GenOptions o, std::ostream& out) {
  if (!o.replay.empty()) LoadReplay(o);
  if (o.task.empty() == o.mix.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "give exactly one of --task, --mix");
  }
  const Resolved r = Resolve(o.common);
  const DatasetFormat format = RequireFormat(o.format);
  std::vector<Sample> samples;
  std::string spec;
  if (!o.task.empty()) {
    const TaskId task = RequireTask(o.task);
    samples = o.common.serial
                  ? GenerateSerial(task, r.suite, r.seed, 0, o.n)
                  : GenerateParallel(task, r.suite, r.seed, 0, o.n);
    const MixEntry one{task, o.n};
    spec = "task:" + RenderMixSpec(std::span(&one, 1));
  } else {
    const std::vector<MixEntry> mix = ParseMixSpec(o.mix);
    samples = GenerateMix(mix, r.suite, r.seed, !o.common.serial);
    spec = "mix:" + RenderMixSpec(mix);
  }

  const fs::path dir(o.out_dir);
  EnsureDir(dir);
  const std::string file_name =
      format == DatasetFormat::kJsonl ? "samples.jsonl" : "samples.tsv";
  WriteDatasetFile(samples, dir / file_name, format);
  ManifestInputs inputs;
  inputs.master_seed = r.seed;
  inputs.spec = spec;
  inputs.config = EchoSuiteConfig(r.suite);
  inputs.format = format;
  inputs.dataset_file = file_name;
  const nlohmann::ordered_json manifest =
      BuildManifest(inputs, samples, FileSha256(dir / file_name));
  WriteText(dir / kManifestName, manifest.dump(2) + "\n");
  out << "wrote " << samples.size() << " samples to "
      << (dir / file_name).string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct ValidateOptions {
  std::string data;
  std::string format;
  std::string manifest;
};

int RunValidate(const ValidateOptions& o, std::ostream& out) {
  const fs::path path(o.data);
  const std::vector<Sample> samples =
      ReadDatasetFile(path, FormatFor(o.format, path));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Violations v = ValidateSample(samples[i]);
    for (const Violation& x : v) {
      out << i << "\t" << TaskName(samples[i].task) << "\t"
          << ViolationName(x.kind) << "\t" << x.detail << "\n";
    }
    if (!v.empty()) ++bad;
  }
  bool digest_ok = true;
  if (!o.manifest.empty()) {
    std::ifstream in(o.manifest, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + o.manifest);
    const nlohmann::json m = nlohmann::json::parse(in, nullptr, false);
    const std::string expected =
        m.is_object() && m.contains("digest") && m["digest"].is_string()
            ? m["digest"].get<std::string>()
            : "";
    digest_ok = expected == "sha256:" + FileSha256(path);
    out << "digest " << (digest_ok ? "ok" : "MISMATCH") << "\n";
  }
  out << samples.size() << " samples, " << bad << " with violations\n";
  return bad == 0 && digest_ok ? kExitOk : kExitData;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  CommonOptions common;
  std::string gold;
  std::string pred;
  std::string format;
  std::string task;
  std::string out_dir;
};

int RunEval(const EvalOptions& o, std::ostream& out) {
  Resolve(o.common);
  const fs::path gold_path(o.gold);
  const std::vector<Sample> gold =
      ReadDatasetFile(gold_path, FormatFor(o.format, gold_path));
  const std::vector<std::string> preds = ReadPredictionsFile(o.pred);
  std::optional<TaskId> task;
  if (!o.task.empty()) task = RequireTask(o.task);
  const EvalReport report = o.common.serial
                                ? EvaluateSerial(gold, preds, task)
                                : EvaluateParallel(gold, preds, task);
  const std::string table = report.ToTable();
  out << table;
  if (!o.out_dir.empty()) {
    EnsureDir(o.out_dir);
    WriteText(fs::path(o.out_dir) / "report.json", report.ToJson().dump(2) + "\n");
    WriteText(fs::path(o.out_dir) / "report.txt", table);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  CommonOptions common;
  std::string sample_file;
  std::string format;
  std::size_t index = 0;
  std::optional<int> restarts;
  std::optional<int> steps;
  std::optional<bool> accept_equal;
  std::optional<double> penalty;
  std::optional<int> polish_steps;
  std::size_t holdout = 100;
  bool reference = false;
  bool trace = false;
  std::string out_dir;
};

int RunSolve(const SolveOptions& o, std::ostream& out) {
  Resolved r = Resolve(o.common);
  if (o.restarts) r.search.restarts = *o.restarts;
  if (o.steps) r.search.steps = *o.steps;
  if (o.accept_equal) r.search.accept_equal = *o.accept_equal;
  if (o.penalty) r.search.penalty = *o.penalty;
  if (o.polish_steps) r.search.polish_steps = *o.polish_steps;
  r.search.Validate();

  Sample train;
  if (!o.sample_file.empty()) {
    const fs::path path(o.sample_file);
    const std::vector<Sample> data =
        ReadDatasetFile(path, FormatFor(o.format, path));
    if (o.index >= data.size()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "index " + std::to_string(o.index) + " past the " +
                      std::to_string(data.size()) + " samples");
    }
    train = data[o.index];
  } else {
    train = Generate(TaskId::kPen, r.suite, SampleSeed(r.seed, TaskId::kPen, 0));
  }

  SearchResult result;
  if (o.reference) {
    result.table = ReferenceProgram();
    result.stats.best = ProgramFitness(result.table, train);
    result.stats.perfect = result.stats.best.perfect;
  } else {
    const uint64_t search_seed = DeriveSeed(r.seed, kSearchStream);
    result = o.common.serial ? HillClimb(train, r.search, search_seed)
                             : HillClimbParallel(train, r.search, search_seed);
  }
  const std::vector<Sample> holdout =
      o.common.serial ? GenerateSerial(TaskId::kPen, r.suite, r.seed,
                                       kHoldoutFirstIndex, o.holdout)
                      : GenerateParallel(TaskId::kPen, r.suite, r.seed,
                                         kHoldoutFirstIndex, o.holdout);
  const double accuracy = ProgramAccuracy(result.table, holdout);

  nlohmann::ordered_json stats = result.stats.ToJson();
  stats["reference"] = o.reference;
  stats["train_answer_len"] = SplitTokens(train.target).size();
  stats["holdout_n"] = holdout.size();
  stats["holdout_accuracy"] = accuracy;
  stats["search"] = {{"restarts", r.search.restarts},
                     {"steps", r.search.steps},
                     {"accept_equal", r.search.accept_equal},
                     {"penalty", r.search.penalty},
                     {"polish_steps", r.search.polish_steps},
                     {"seed", r.seed}};

  out << "perfect " << (result.stats.perfect ? "yes" : "no") << ", fitness "
      << result.stats.best.matches << "/" << SplitTokens(train.target).size()
      << ", restarts used " << result.stats.restarts_used << ", steps "
      << result.stats.total_steps << "\n";
  out << "trajectory";
  for (const auto& [step, matches] : result.stats.trajectory) {
    out << " " << step << ":" << matches;
  }
  out << "\nholdout accuracy " << accuracy << " on " << holdout.size()
      << " samples\n";
  if (o.trace) {
    out << FormatTrace(
        RunProgram(result.table, Seq::Parse(train.input), {}, true));
  }
  if (!o.out_dir.empty()) {
    EnsureDir(o.out_dir);
    WriteText(fs::path(o.out_dir) / "program.json",
              result.table.ToJson().dump(2) + "\n");
    WriteText(fs::path(o.out_dir) / "stats.json", stats.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- prompt

struct PromptCliOptions {
  CommonOptions common;
  std::string setting;
  std::string task;
  std::optional<int> k;
  std::size_t n = 1;
  bool traps_removed = false;
  std::string out_path;
};

int RunPrompt(const PromptCliOptions& o, std::ostream& out) {
  Resolved r = Resolve(o.common);
  const std::optional<PromptSetting> setting = ParsePromptSetting(o.setting);
  if (!setting) {
    throw Error(ErrorCode::kInvalidConfig,
                "unknown setting '" + o.setting + "'");
  }
  const TaskId task = RequireTask(o.task);
  if (task != TaskId::kPen && task != TaskId::kPerm) {
    throw Error(ErrorCode::kUnsupportedCombination,
                std::string(PromptSettingName(*setting)) + " is not defined for " +
                    std::string(TaskName(task)));
  }
  if (o.traps_removed) r.suite.pen.traps = false;
  const int k = o.k.value_or(DefaultShots(*setting));
  if (k < 0) throw Error(ErrorCode::kInvalidConfig, "--k must be >= 0");
  PromptOptions options;
  options.traps_removed = o.traps_removed;

  std::string text;
  for (std::size_t q = 0; q < o.n; ++q) {
    const Sample query = Generate(task, r.suite, SampleSeed(r.seed, task, q));
    const std::vector<Sample> shots = GenerateSerial(
        task, r.suite, r.seed, kShotFirstIndex + q * static_cast<uint64_t>(k),
        static_cast<std::size_t>(k));
    nlohmann::ordered_json record;
    record["prompt"] = RenderPrompt(*setting, task, shots, query, options);
    record["gold"] = query.target;
    text += record.dump() + "\n";
  }
  Emit(o.out_path, text, out);
  return kExitOk;
}

// ---------------------------------------------------------------- inspect

struct InspectOptions {
  CommonOptions common;
  std::string data;
  std::string format;
  std::size_t index = 0;
  std::string task;
  std::string as = "dot";
  std::string out_path;
};

int RunInspect(const InspectOptions& o, std::ostream& out) {
  const Resolved r = Resolve(o.common);
  Sample sample;
  if (!o.data.empty()) {
    const fs::path path(o.data);
    const std::vector<Sample> data =
        ReadDatasetFile(path, FormatFor(o.format, path));
    if (o.index >= data.size()) {
      throw Error(ErrorCode::kMalformedRecord,
                  "index " + std::to_string(o.index) + " past the " +
                      std::to_string(data.size()) + " samples");
    }
    sample = data[o.index];
  } else if (!o.task.empty()) {
    const TaskId task = RequireTask(o.task);
    sample = Generate(task, r.suite, SampleSeed(r.seed, task, o.index));
  } else {
    throw Error(ErrorCode::kInvalidConfig, "give --data or --task");
  }
  const TraceGraph graph = ExportTraceGraph(sample);
  if (o.as == "dot") {
    Emit(o.out_path, graph.ToDot(), out);
  } else if (o.as == "json") {
    Emit(o.out_path, graph.ToJson().dump(2) + "\n", out);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "--as must be dot or json");
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kUnsupportedCombination:
    case ErrorCode::kUnsupportedTask:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Generators, oracles, metrics, solver and prompts for "
               "pointer-execution benchmark tasks"};
  app.name("pointer-suite");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a dataset");
  AddCommon(gen_cmd, gen.common);
  gen_cmd->add_option("--task", gen.task, "Single task id (pen, perm, hss, ...)");
  gen_cmd->add_option("--mix", gen.mix, "Mixture such as pen=5,cpy=2");
  gen_cmd->add_option("--n", gen.n, "Sample count with --task");
  gen_cmd->add_option("--out", gen.out_dir, "Output directory")->required();
  gen_cmd->add_option("--format", gen.format, "jsonl or flat");
  gen_cmd->add_option("--replay", gen.replay,
                      "Regenerate the run recorded in a manifest")
      ->check(CLI::ExistingFile);

  ValidateOptions val;
  CLI::App* val_cmd = app.add_subcommand("validate", "Check a dataset");
  val_cmd->add_option("--data", val.data, "Dataset file")->required()->check(
      CLI::ExistingFile);
  val_cmd->add_option("--format", val.format, "jsonl or flat (default: by extension)");
  val_cmd->add_option("--manifest", val.manifest, "Also verify this manifest's digest");

  EvalOptions ev;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Score model predictions");
  AddCommon(eval_cmd, ev.common);
  eval_cmd->add_option("--gold", ev.gold, "Gold dataset")->required()->check(
      CLI::ExistingFile);
  eval_cmd->add_option("--pred", ev.pred, "Prediction file")->required()->check(
      CLI::ExistingFile);
  eval_cmd->add_option("--format", ev.format, "Gold format (default: by extension)");
  eval_cmd->add_option("--task", ev.task, "Score only samples of this task");
  eval_cmd->add_option("--out", ev.out_dir, "Write report.json and report.txt here");

  SolveOptions sv;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Learn PEN from one sample");
  AddCommon(solve_cmd, sv.common);
  solve_cmd->add_option("--sample", sv.sample_file, "Dataset holding the training sample")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--format", sv.format, "Dataset format");
  solve_cmd->add_option("--index", sv.index, "Training sample index");
  solve_cmd->add_option("--restarts", sv.restarts, "Hill-climb restarts");
  solve_cmd->add_option("--steps", sv.steps, "Steps per restart");
  solve_cmd->add_option("--accept-equal", sv.accept_equal, "Accept equal-fitness moves");
  solve_cmd->add_option("--penalty", sv.penalty, "Repeat-change penalty weight");
  solve_cmd->add_option("--polish-steps", sv.polish_steps,
                        "Steps spent shortening a perfect program");
  solve_cmd->add_option("--holdout", sv.holdout, "Held-out samples to score");
  solve_cmd->add_flag("--reference", sv.reference, "Score the hand-written program");
  solve_cmd->add_flag("--trace", sv.trace, "Print the program's execution trace");
  solve_cmd->add_option("--out", sv.out_dir, "Write program.json and stats.json here");

  PromptCliOptions pr;
  CLI::App* prompt_cmd = app.add_subcommand("prompt", "Render prompts");
  AddCommon(prompt_cmd, pr.common);
  prompt_cmd->add_option("--setting", pr.setting, "fewshot, fewshot-description, cot, "
                                                   "fewshot-cot, subtask-cot, "
                                                   "analogical-cot, code-interpreter")
      ->required();
  prompt_cmd->add_option("--task", pr.task, "pen or perm")->required();
  prompt_cmd->add_option("--k", pr.k, "Shots per prompt");
  prompt_cmd->add_option("--n", pr.n, "Number of prompts");
  prompt_cmd->add_flag("--traps-removed", pr.traps_removed,
                       "PEN without attention traps");
  prompt_cmd->add_option("--out", pr.out_path, "JSONL output (default stdout)");

  InspectOptions in;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "Export a trace graph");
  AddCommon(inspect_cmd, in.common);
  inspect_cmd->add_option("--data", in.data, "Dataset file")->check(CLI::ExistingFile);
  inspect_cmd->add_option("--format", in.format, "Dataset format");
  inspect_cmd->add_option("--index", in.index, "Sample index");
  inspect_cmd->add_option("--task", in.task, "Generate a fresh sample of this task");
  inspect_cmd->add_option("--as", in.as, "dot or json");
  inspect_cmd->add_option("--out", in.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return RunGen(gen, out);
    if (val_cmd->parsed()) return RunValidate(val, out);
    if (eval_cmd->parsed()) return RunEval(ev, out);
    if (solve_cmd->parsed()) return RunSolve(sv, out);
    if (prompt_cmd->parsed()) return RunPrompt(pr, out);
    if (inspect_cmd->parsed()) return RunInspect(in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace pointer_suite

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

#include "pointer_suite/prompts.h"

#include <array>
#include <string>
#include <vector>

#include "pointer_suite/error.h"
#include "pointer_suite/pen.h"
#include "pointer_suite/perm.h"
#include "pointer_suite/seq.h"

namespace pointer_suite {
namespace {

constexpr std::array<std::string_view, 7> kSettingNames = {
    "fewshot",     "fewshot-description", "cot",
    "fewshot-cot", "subtask-cot",         "analogical-cot",
    "code-interpreter",
};

std::string Quote(std::string_view s) {
  return "\"" + std::string(s) + "\"";
}

void RequireTask(const Sample& sample, TaskId task) {
  if (sample.task != task) {
    throw Error(ErrorCode::kInvalidConfig,
                "narration needs a " + std::string(TaskName(task)) +
                    " sample, got " + std::string(TaskName(sample.task)));
  }
}

std::string ClosingLine(PromptSetting setting) {
  switch (setting) {
    case PromptSetting::kCot:
    case PromptSetting::kFewShotCot:
    case PromptSetting::kSubtaskCot:
    case PromptSetting::kAnalogicalCot:
      return std::string(kReasonPrefix) + std::string(kClosingInstruction);
    case PromptSetting::kCodeInterpreter:
      return std::string(kCodeInterpreterPrefix) +
             std::string(kClosingInstruction);
    default:
      return std::string(kClosingInstruction);
  }
}

bool HasDescription(PromptSetting setting) {
  return setting != PromptSetting::kFewShot;
}

std::string ShotBlock(PromptSetting setting, TaskId task, const Sample& s) {
  std::string block = "Example: " + s.input + "\n";
  const bool pen = task == TaskId::kPen;
  switch (setting) {
    case PromptSetting::kFewShotCot:
      return block + (pen ? NarratePenFewShotCot(s) : NarratePermFewShotCot(s));
    case PromptSetting::kSubtaskCot:
      return block + (pen ? NarratePenSubtaskCot(s) : NarratePermSubtaskCot(s));
    default:
      return block + "Answer: " + s.target;
  }
}

void CheckShotCount(PromptSetting setting, std::size_t shots) {
  if (setting == PromptSetting::kAnalogicalCot && shots != 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "analogical-cot takes no shots; the model recalls its own");
  }
  if (setting == PromptSetting::kCodeInterpreter && shots != 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "code-interpreter prompts take exactly one shot");
  }
  if (setting != PromptSetting::kAnalogicalCot && shots == 0) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(PromptSettingName(setting)) +
                    " needs at least one shot");
  }
}

bool TrapsOff(const Sample& s) {
  return s.meta.is_object() && s.meta.contains("traps") &&
         s.meta["traps"].is_boolean() && !s.meta["traps"].get<bool>();
}

std::string ReplaceAll(std::string text, std::string_view slot,
                       std::string_view value) {
  for (std::size_t at = text.find(slot); at != std::string::npos;
       at = text.find(slot, at + value.size())) {
    text.replace(at, slot.size(), value);
  }
  return text;
}

}  // namespace

std::string_view PromptSettingName(PromptSetting s) {
  return kSettingNames[static_cast<int>(s)];
}

std::optional<PromptSetting> ParsePromptSetting(std::string_view name) {
  for (std::size_t i = 0; i < kSettingNames.size(); ++i) {
    if (kSettingNames[i] == name) return static_cast<PromptSetting>(i);
  }
  return std::nullopt;
}

int DefaultShots(PromptSetting s) {
  switch (s) {
    case PromptSetting::kCodeInterpreter:
      return 1;
    case PromptSetting::kAnalogicalCot:
      return 0;
    default:
      return 8;
  }
}

std::string RenderPrompt(PromptSetting setting, TaskId task,
                         std::span<const Sample> shots, const Sample& query,
                         const PromptOptions& options) {
  if (task != TaskId::kPen && task != TaskId::kPerm) {
    throw Error(ErrorCode::kUnsupportedCombination,
                std::string(PromptSettingName(setting)) +
                    " prompts exist for PEN and PERM only, not " +
                    std::string(TaskName(task)));
  }
  if (options.traps_removed && task != TaskId::kPen) {
    throw Error(ErrorCode::kUnsupportedCombination,
                "traps_removed applies to PEN only");
  }
  CheckShotCount(setting, shots.size());
  auto check = [&](const Sample& s) {
    if (s.task != task) {
      throw Error(ErrorCode::kInvalidConfig,
                  "prompt sample is " + std::string(TaskName(s.task)) +
                      ", expected " + std::string(TaskName(task)));
    }
    if (options.traps_removed && !TrapsOff(s)) {
      throw Error(ErrorCode::kUnsupportedCombination,
                  "traps_removed needs samples generated with traps off");
    }
  };
  for (const Sample& s : shots) check(s);
  check(query);

  const std::string_view description =
      task == TaskId::kPen ? kPenDescription : kPermDescription;
  if (setting == PromptSetting::kAnalogicalCot) {
    std::string out = ReplaceAll(std::string(kAnalogicalScaffold),
                                 "{description}", description);
    out = ReplaceAll(std::move(out), "{query}", query.input);
    return out + "\n" + ClosingLine(setting);
  }

  std::string out;
  if (HasDescription(setting)) {
    out += description;
    out += "\n\n";
  }
  for (const Sample& s : shots) {
    out += ShotBlock(setting, task, s);
    out += "\n\n";
  }
  out += "Your question: " + query.input + "\n";
  out += ClosingLine(setting);
  return out;
}

std::string NarratePenFewShotCot(const Sample& sample) {
  RequireTask(sample, TaskId::kPen);
  const Seq seq = Seq::Parse(sample.input);
  const std::vector<std::size_t> chain = TracePenChain(seq);
  std::vector<std::string> answer;
  std::string out;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const std::string& green = seq.token(chain[j]);
    const auto right = seq.RightNeighbor(chain[j]);
    if (!right) {
      throw Error(ErrorCode::kMissingNeighbor,
                  "'" + green + "' has no right neighbor");
    }
    const std::string& yellow = seq.token(*right);
    answer.push_back(yellow);
    if (j == 0) {
      out += "The leftmost word is " + Quote(green) + ". Its right neighbor is " +
             Quote(yellow) + ", so the first output word is " + Quote(yellow) +
             ".\n";
    } else {
      out += "Now, we need to find a word that starts with " +
             Quote(seq.at(chain[j - 1]).suffix()) + ". The word is " +
             Quote(green) + ". Its right neighbor is " + Quote(yellow) +
             ", so the next output word is " + Quote(yellow) + ".\n";
    }
  }
  const std::string target = JoinTokens(answer);
  out += "There is no word that starts with " +
         Quote(seq.at(chain.back()).suffix()) +
         ", so we are done with the matching.\n";
  out += "Therefore the answer is: " + Quote(target) + "\n";
  out += "Answer: " + target;
  return out;
}

std::string NarratePenSubtaskCot(const Sample& sample) {
  RequireTask(sample, TaskId::kPen);
  const Seq seq = Seq::Parse(sample.input);
  const std::vector<std::size_t> chain = TracePenChain(seq);
  std::string out =
      "First we find the matching sequence of words, then we find the "
      "neighbors.\n";
  out += "The first word is " + Quote(seq.token(chain[0])) + ".\n";
  for (std::size_t j = 1; j < chain.size(); ++j) {
    out += "Now we need to find a word that starts with " +
           Quote(seq.at(chain[j - 1]).suffix()) + ". The word is " +
           Quote(seq.token(chain[j])) + ".\n";
  }
  out += "There is no word that starts with " +
         Quote(seq.at(chain.back()).suffix()) +
         ", so we are done with the matching.\n";
  out += "Now we need to find the neighbors of the matched words.\n";
  std::vector<std::string> answer;
  for (std::size_t pos : chain) {
    const auto right = seq.RightNeighbor(pos);
    if (!right) {
      throw Error(ErrorCode::kMissingNeighbor,
                  "'" + seq.token(pos) + "' has no right neighbor");
    }
    answer.push_back(seq.token(*right));
    out += "The right neighbor of " + Quote(seq.token(pos)) + " is " +
           Quote(answer.back()) + ".\n";
  }
  const std::string target = JoinTokens(answer);
  out += "Therefore the answer is: " + Quote(target) + "\n";
  out += "Answer: " + target;
  return out;
}

namespace {

// Shared by both PERM narrations: the per-step match sentences.
struct PermNarrationParts {
  PermInput input;
  std::vector<MulticountStep> steps;
};

PermNarrationParts PreparePerm(const Sample& sample) {
  RequireTask(sample, TaskId::kPerm);
  PermNarrationParts parts{ParsePermInput(sample.input), {}};
  parts.steps = TracePerm(parts.input.seq, parts.input.start);
  return parts;
}

std::string PermTail(const PermNarrationParts& p) {
  return "There are no further matches for " +
         Quote(p.input.seq.token(p.steps.back().position)) +
         ", so we end the sequence here.\n";
}

std::string PermClosing(const PermNarrationParts& p) {
  std::vector<std::string> answer;
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    answer.push_back(p.input.seq.token(it->position) + "." +
                     std::to_string(it->value));
  }
  const std::string target = JoinTokens(answer);
  return "Thus, the answer is: " + Quote(target) + ".\nAnswer: " + target;
}

}  // namespace

std::string NarratePermFewShotCot(const Sample& sample) {
  const PermNarrationParts p = PreparePerm(sample);
  const Seq& seq = p.input.seq;
  std::string out =
      "Starting with " + Quote(p.input.start) + ", let's match and calculate:\n";
  for (std::size_t j = 1; j < p.steps.size(); ++j) {
    const bool left = p.steps[j].left > p.steps[j - 1].left;
    out += Quote(seq.token(p.steps[j - 1].position)) + " matches with " +
           Quote(seq.token(p.steps[j].position)) + ". " +
           (left ? "This is a left match, " : "No left match, ") +
           std::to_string(p.steps[j].left) + " left matches so far.\n";
  }
  out += PermTail(p);
  out += "Reversing the sequence and formatting it as per the instructions, "
         "we get:\n";
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    out += seq.token(it->position) + "." + std::to_string(it->value) + "\n";
  }
  return out + PermClosing(p);
}

std::string NarratePermSubtaskCot(const Sample& sample) {
  const PermNarrationParts p = PreparePerm(sample);
  const Seq& seq = p.input.seq;
  std::string out = "First, let's enumerate the words:\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out += std::to_string(i + 1) + ":" + seq.token(i) + "\n";
  }
  out += "Starting with " + Quote(p.input.start) +
         ", let's match and calculate:\n";
  for (std::size_t j = 1; j < p.steps.size(); ++j) {
    const std::string& from = seq.token(p.steps[j - 1].position);
    const std::string& to = seq.token(p.steps[j].position);
    // Ordinals keep the fixed "th" suffix of the worked examples.
    out += Quote(from) + " matches with " + Quote(to) + ". The word " +
           Quote(from) + " is " + std::to_string(p.steps[j - 1].position + 1) +
           "th and " + Quote(to) + " is " +
           std::to_string(p.steps[j].position + 1) + "th, so " +
           std::to_string(p.steps[j].left) + " left matches so far.\n";
  }
  out += PermTail(p);
  out += "Finally, we calculate the number of left matches times the number "
         "of matches for each word and get:\n";
  for (const MulticountStep& s : p.steps) {
    out += seq.token(s.position) + ": " + std::to_string(s.left) + "*" +
           std::to_string(s.matches) + "=" + std::to_string(s.value) + "\n";
  }
  return out + PermClosing(p);
}

}  // namespace pointer_suite

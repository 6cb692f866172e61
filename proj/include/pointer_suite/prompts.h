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

#ifndef POINTER_SUITE_PROMPTS_H_
#define POINTER_SUITE_PROMPTS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pointer_suite/sample.h"

namespace pointer_suite {

enum class PromptSetting {
  kFewShot,
  kFewShotDescription,
  kCot,
  kFewShotCot,
  kSubtaskCot,
  kAnalogicalCot,
  kCodeInterpreter,
};

// "fewshot", "fewshot-description", "cot", "fewshot-cot", "subtask-cot",
// "analogical-cot", "code-interpreter".
std::string_view PromptSettingName(PromptSetting s);
std::optional<PromptSetting> ParsePromptSetting(std::string_view name);
// 8 shots, except one for the code interpreter and none for analogical CoT
// (that setting asks the model to recall its own examples).
int DefaultShots(PromptSetting s);

// Bump when any template text below changes; golden files pin the output.
inline constexpr int kTemplateVersion = 1;

inline constexpr std::string_view kPenDescription =
    "I give you a sequence of words. Each word has four characters plus a "
    "middle, words are separated by spaces. Start with the leftmost word. "
    "Output its neighbor. Then, match the last two characters of the current "
    "word (i.e. not the neighbor) to the word starting with those two "
    "characters. Again, output the neighbor. Do this until your current word "
    "(not the neighbor) has no match anymore.";

inline constexpr std::string_view kPermDescription =
    "I give you a sequence of words. The last word (after the \"|\") is the "
    "word to start with. Now match match the last two characters of the "
    "current word to the word starting with those two characters. If this "
    "match was going to the left, i.e. the matched word is left of the "
    "current word in the sequence, increase a variable counting the number "
    "of left matchings. Do this until your current word has no match "
    "anymore.\n"
    "Finally, output this sequence of words, in reverse order in the format "
    "word.x where x is the number of left matchings until the output word "
    "times the number of matchings until the output word. Example answer: "
    "abcd.4 efab.1 ghef.0";

inline constexpr std::string_view kClosingInstruction =
    "Clearly mark your answer by writing 'Answer: <your answer>' as last "
    "line.";
inline constexpr std::string_view kReasonPrefix = "Reason step by step. ";
inline constexpr std::string_view kCodeInterpreterPrefix =
    "Reason step by step. Then, use the code interpreter to solve the task. ";

// {description} and {query} are the placeholder slots.
inline constexpr std::string_view kAnalogicalScaffold =
    "Your task is to tackle algorithmic problems. When presented with an "
    "algorithmic problem, recall relevant problems as examples. Afterward, "
    "proceed to solve the initial problem.\n"
    "# Problem: {description}\n"
    "Sequence: {query}\n"
    "# Instructions:\n"
    "## Relevant Problems:\n"
    "Recall three examples of algorithmic problems that are relevant to the "
    "initial problem. Your problems should be distinct from each other and "
    "from the initial problem (e.g., involving different numbers and names "
    "and instructions). For each problem:\n"
    " - After \"Q: \", describe the problem\n"
    " - After \"A: \", explain the solution and enclose the ultimate answer "
    "in \\boxed{}.\n"
    "## Solve the Initial Problem:\n"
    "Q: Copy and paste the initial problem here.\n"
    "A: Explain the solution and enclose the ultimate answer in \\boxed{} "
    "here.";

struct PromptOptions {
  // PEN only: every sample must come from a traps=false generator.
  bool traps_removed = false;
};

// Throws Error(kUnsupportedCombination) for tasks other than PEN and PERM
// or for traps_removed outside PEN, and Error(kInvalidConfig) when the shot
// count does not fit the setting or samples belong to another task.
std::string RenderPrompt(PromptSetting setting, TaskId task,
                         std::span<const Sample> shots, const Sample& query,
                         const PromptOptions& options = {});

// Worked solutions built from the oracle traces. Each ends with the
// figure's closing sentence and an "Answer: <target>" line.
std::string NarratePenFewShotCot(const Sample& sample);
std::string NarratePenSubtaskCot(const Sample& sample);
std::string NarratePermFewShotCot(const Sample& sample);
std::string NarratePermSubtaskCot(const Sample& sample);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_PROMPTS_H_

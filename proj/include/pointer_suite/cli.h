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

#ifndef POINTER_SUITE_CLI_H_
#define POINTER_SUITE_CLI_H_

#include <iosfwd>

namespace pointer_suite {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the pointer-suite tool: gen, validate, eval, solve,
// prompt and inspect. Never throws; failures map to exit codes, with
// invalid flags, configs and task/setting combinations counting as usage
// errors and everything found in the data as data errors.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_CLI_H_

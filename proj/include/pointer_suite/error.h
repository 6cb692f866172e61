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

#ifndef POINTER_SUITE_ERROR_H_
#define POINTER_SUITE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pointer_suite {

enum class ErrorCode {
  kMalformedToken,
  kMalformedRecord,
  kIoFailure,
  kUnsupportedTask,
  kConfigInfeasible,
  kInvalidConfig,
  kAmbiguousMatch,
  kMissingNeighbor,
  kStartNotFound,
  kInstanceTooLarge,
  kNoAnswerLine,
  kLengthMismatch,
  kUnsupportedCombination,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library carry one of the codes above so that
// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The text without the code prefix, for wrapping in another error.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace pointer_suite

#endif  // POINTER_SUITE_ERROR_H_

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

#ifndef POINTER_SUITE_CONFIG_H_
#define POINTER_SUITE_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pointer_suite/tasks.h"

namespace pointer_suite {

// One "section.key=value" line of a config file. Blank lines and lines
// starting with '#' are skipped; whitespace around key and value is trimmed.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// Throws Error(kInvalidConfig) on a line without '=' or a repeated key.
std::vector<ConfigEntry> ParseConfigText(std::string_view text);
// Throws Error(kIoFailure) when unreadable.
std::vector<ConfigEntry> LoadConfigFile(const std::filesystem::path& path);

// Applies a generator key such as "pen.chain_len" or "hss.values". Returns
// false when the key is not a generator key; throws Error(kInvalidConfig)
// for a known key with a bad value.
bool ApplySuiteKey(SuiteConfig& config, const std::string& key,
                   const std::string& value);

// Every generator key with its resolved value, in a fixed order.
nlohmann::ordered_json EchoSuiteConfig(const SuiteConfig& config);

// "true"/"false", "1"/"0", "on"/"off", "yes"/"no".
bool ParseBool(const std::string& key, const std::string& value);
int ParseIntValue(const std::string& key, const std::string& value);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_CONFIG_H_

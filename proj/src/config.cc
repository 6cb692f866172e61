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

#include "pointer_suite/config.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "pointer_suite/error.h"
#include "pointer_suite/vocabulary.h"

namespace pointer_suite {
namespace {

std::string Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

[[noreturn]] void BadValue(const std::string& key, const std::string& value,
                           const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig,
              key + "=" + value + ": " + why);
}

IntRange ParseRange(const std::string& key, const std::string& value) {
  try {
    return IntRange::Parse(value);
  } catch (const Error& e) {
    BadValue(key, value, e.message());
  }
}

std::string ParseDigits(const std::string& key, const std::string& value) {
  if (value.empty() ||
      value.find_first_not_of("0123456789") != std::string::npos) {
    BadValue(key, value, "expected a non-empty set of digits");
  }
  std::string sorted = value;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

using Setter = std::function<void(SuiteConfig&, const std::string&,
                                  const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const auto* setters = new std::map<std::string, Setter>{
      {"pen.chain_len",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.pen.chain_len = ParseRange(k, v);
       }},
      {"pen.digits",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.pen.digits = ParseDigits(k, v);
       }},
      {"pen.traps",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.pen.traps = ParseBool(k, v);
       }},
      {"pen.free_greens",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         try {
           c.pen.free_greens = FreeGreens::Parse(v);
         } catch (const Error& e) {
           BadValue(k, v, e.message());
         }
       }},
      {"copy.length",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.copy.length = ParseRange(k, v);
       }},
      {"copy.digits",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.copy.digits = ParseDigits(k, v);
       }},
      {"perm.chain_len",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.perm.chain_len = ParseRange(k, v);
       }},
      {"perm.digit",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         if (v.size() != 1) BadValue(k, v, "expected one digit");
         c.perm.digit = ParseDigits(k, v)[0];
       }},
      {"perm.cycles",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.perm.distractors.cycles = ParseRange(k, v);
       }},
      {"perm.cycle_len",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.perm.distractors.cycle_len = ParseRange(k, v);
       }},
      {"perm.self_loops",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.perm.distractors.self_loops = ParseRange(k, v);
       }},
      {"perm.dead_ends",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.perm.distractors.dead_ends = ParseRange(k, v);
       }},
      {"hss.length",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.hss.length = ParseRange(k, v);
       }},
      {"hss.values",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.hss.values = ParseRange(k, v);
       }},
      {"mul.digits_a",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.mul.mul_digits_a = ParseRange(k, v);
       }},
      {"mul.digits_b",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.mul.mul_digits_b = ParseRange(k, v);
       }},
      {"dmul.digits",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.mul.dmul_digits = ParseRange(k, v);
       }},
      {"add.count",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.mul.add_count = ParseRange(k, v);
       }},
      {"add.digits",
       [](SuiteConfig& c, const std::string& k, const std::string& v) {
         c.mul.add_digits = ParseRange(k, v);
       }},
      {"vocab.words",
       [](SuiteConfig& c, const std::string&, const std::string& v) {
         c.vocab_path = v;
         if (v.empty()) {
           c.pen.natural_pool = c.copy.natural_pool = c.perm.natural_pool =
               nullptr;
           return;
         }
         auto pool = std::make_shared<const GramPool>(GramPool::Load(v));
         c.pen.natural_pool = c.copy.natural_pool = c.perm.natural_pool =
             pool;
       }},
  };
  return *setters;
}

}  // namespace

std::vector<ConfigEntry> ParseConfigText(std::string_view text) {
  std::vector<ConfigEntry> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    ConfigEntry entry{Trim(std::string_view(line).substr(0, eq)),
                      Trim(std::string_view(line).substr(eq + 1)), line_no};
    if (entry.key.empty()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(entry.key).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": '" + entry.key +
                      "' set twice");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ConfigEntry> LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfigText(text.str());
}

bool ApplySuiteKey(SuiteConfig& config, const std::string& key,
                   const std::string& value) {
  const auto& setters = Setters();
  const auto it = setters.find(key);
  if (it == setters.end()) return false;
  it->second(config, key, value);
  return true;
}

nlohmann::ordered_json EchoSuiteConfig(const SuiteConfig& c) {
  nlohmann::ordered_json out;
  out["pen.chain_len"] = c.pen.chain_len.ToString();
  out["pen.digits"] = c.pen.digits;
  out["pen.traps"] = c.pen.traps;
  out["pen.free_greens"] = c.pen.free_greens.ToString();
  out["copy.length"] = c.copy.length.ToString();
  out["copy.digits"] = c.copy.digits;
  out["perm.chain_len"] = c.perm.chain_len.ToString();
  out["perm.digit"] = std::string(1, c.perm.digit);
  out["perm.cycles"] = c.perm.distractors.cycles.ToString();
  out["perm.cycle_len"] = c.perm.distractors.cycle_len.ToString();
  out["perm.self_loops"] = c.perm.distractors.self_loops.ToString();
  out["perm.dead_ends"] = c.perm.distractors.dead_ends.ToString();
  out["hss.length"] = c.hss.length.ToString();
  out["hss.values"] = c.hss.values.ToString();
  out["mul.digits_a"] = c.mul.mul_digits_a.ToString();
  out["mul.digits_b"] = c.mul.mul_digits_b.ToString();
  out["dmul.digits"] = c.mul.dmul_digits.ToString();
  out["add.count"] = c.mul.add_count.ToString();
  out["add.digits"] = c.mul.add_digits.ToString();
  out["vocab.words"] = c.vocab_path;
  return out;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") {
    return true;
  }
  if (value == "false" || value == "0" || value == "off" || value == "no") {
    return false;
  }
  BadValue(key, value, "expected a boolean");
}

int ParseIntValue(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    BadValue(key, value, "expected an integer");
  }
  return out;
}

}  // namespace pointer_suite

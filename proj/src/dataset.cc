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

#include "pointer_suite/dataset.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedRecord, why);
}

TaskId TaskFromField(std::string_view name) {
  const std::optional<TaskId> task = ParseTaskName(name);
  if (!task.has_value()) Malformed("unknown task '" + std::string(name) + "'");
  return *task;
}

std::string RequireString(const nlohmann::json& record, const char* key) {
  const auto it = record.find(key);
  if (it == record.end()) Malformed(std::string("missing field '") + key + "'");
  if (!it->is_string()) Malformed(std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

}  // namespace

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name) {
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "flat") return DatasetFormat::kFlat;
  return std::nullopt;
}

std::string_view DatasetFormatName(DatasetFormat format) {
  return format == DatasetFormat::kJsonl ? "jsonl" : "flat";
}

DatasetFormat FormatFromPath(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".jsonl" || ext == ".json" ? DatasetFormat::kJsonl
                                           : DatasetFormat::kFlat;
}

std::string SerializeSample(const Sample& sample, DatasetFormat format) {
  if (format == DatasetFormat::kFlat) {
    for (const std::string* field : {&sample.input, &sample.target}) {
      if (field->find_first_of("\t\n") != std::string::npos) {
        Malformed("TAB or newline inside a flat-format field");
      }
    }
    std::string line(TaskName(sample.task));
    line += '\t';
    line += sample.input;
    line += '\t';
    line += sample.target;
    return line;
  }
  nlohmann::ordered_json record;
  record["task"] = TaskName(sample.task);
  record["input"] = sample.input;
  record["target"] = sample.target;
  record["meta"] = sample.meta;
  return record.dump();
}

Sample ParseSampleLine(std::string_view line, DatasetFormat format) {
  Sample sample;
  if (format == DatasetFormat::kFlat) {
    const auto first = line.find('\t');
    const auto second =
        first == std::string_view::npos ? first : line.find('\t', first + 1);
    if (second == std::string_view::npos ||
        line.find('\t', second + 1) != std::string_view::npos) {
      Malformed("flat record needs exactly three TAB-separated fields");
    }
    sample.task = TaskFromField(line.substr(0, first));
    sample.input = std::string(line.substr(first + 1, second - first - 1));
    sample.target = std::string(line.substr(second + 1));
    return sample;
  }
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) Malformed("record is not a JSON object");
  sample.task = TaskFromField(RequireString(record, "task"));
  sample.input = RequireString(record, "input");
  sample.target = RequireString(record, "target");
  if (const auto it = record.find("meta"); it != record.end()) {
    if (!it->is_object()) Malformed("field 'meta' is not an object");
    sample.meta = *it;
  }
  return sample;
}

void WriteDataset(std::span<const Sample> samples, std::ostream& sink,
                  DatasetFormat format) {
  for (const Sample& sample : samples) {
    sink << SerializeSample(sample, format) << '\n';
  }
  if (!sink) throw Error(ErrorCode::kIoFailure, "write failed");
}

std::vector<Sample> ReadDataset(std::istream& source, DatasetFormat format) {
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      samples.push_back(ParseSampleLine(line, format));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  if (source.bad()) throw Error(ErrorCode::kIoFailure, "read failed");
  return samples;
}

void WriteDatasetFile(std::span<const Sample> samples,
                      const std::filesystem::path& path, DatasetFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  WriteDataset(samples, out, format);
}

std::vector<Sample> ReadDatasetFile(const std::filesystem::path& path,
                                    DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return ReadDataset(in, format);
}

}  // namespace pointer_suite

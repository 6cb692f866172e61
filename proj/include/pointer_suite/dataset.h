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

#ifndef POINTER_SUITE_DATASET_H_
#define POINTER_SUITE_DATASET_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pointer_suite/sample.h"

namespace pointer_suite {

// jsonl: {"task","input","target","meta"} per line.
// flat:  TASK<TAB>input<TAB>target per line; meta is not carried.
enum class DatasetFormat { kJsonl, kFlat };

std::optional<DatasetFormat> ParseDatasetFormat(std::string_view name);
std::string_view DatasetFormatName(DatasetFormat format);
// ".jsonl" / ".json" select jsonl, everything else flat.
DatasetFormat FormatFromPath(const std::filesystem::path& path);

std::string SerializeSample(const Sample& sample, DatasetFormat format);
// Throws Error(kMalformedRecord).
Sample ParseSampleLine(std::string_view line, DatasetFormat format);

void WriteDataset(std::span<const Sample> samples, std::ostream& sink,
                  DatasetFormat format);
std::vector<Sample> ReadDataset(std::istream& source, DatasetFormat format);

// File variants; throw Error(kIoFailure) when the file cannot be opened.
void WriteDatasetFile(std::span<const Sample> samples,
                      const std::filesystem::path& path, DatasetFormat format);
std::vector<Sample> ReadDatasetFile(const std::filesystem::path& path,
                                    DatasetFormat format);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_DATASET_H_

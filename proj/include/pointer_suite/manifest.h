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

#ifndef POINTER_SUITE_MANIFEST_H_
#define POINTER_SUITE_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "pointer_suite/dataset.h"
#include "pointer_suite/sample.h"

namespace pointer_suite {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view bytes);
// Throws Error(kIoFailure).
std::string FileSha256(const std::filesystem::path& path);

struct ManifestInputs {
  uint64_t master_seed = 0;
  // The generation request, "PEN=1000" or "PEN=5,CPY=2".
  std::string spec;
  nlohmann::ordered_json config;
  DatasetFormat format = DatasetFormat::kJsonl;
  std::string dataset_file;  // file name relative to the manifest
};

// Deliberately free of timestamps, hostnames and thread counts: two runs of
// the same request must produce identical manifests.
nlohmann::ordered_json BuildManifest(const ManifestInputs& inputs,
                                     std::span<const Sample> samples,
                                     const std::string& digest);

}  // namespace pointer_suite

#endif  // POINTER_SUITE_MANIFEST_H_

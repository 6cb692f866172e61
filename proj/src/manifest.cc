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

#include "pointer_suite/manifest.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "pointer_suite/error.h"

namespace pointer_suite {
namespace {

using DigestCtx = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

std::string ToHex(const unsigned char* bytes, unsigned int n) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * n);
  for (unsigned int i = 0; i < n; ++i) {
    out += kHex[bytes[i] >> 4];
    out += kHex[bytes[i] & 0xf];
  }
  return out;
}

DigestCtx NewSha256() {
  DigestCtx ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 initialisation failed");
  }
  return ctx;
}

std::string Finish(EVP_MD_CTX* ctx) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md.data(), &len);
  return ToHex(md.data(), len);
}

}  // namespace

std::string Sha256Hex(std::string_view bytes) {
  DigestCtx ctx = NewSha256();
  EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  return Finish(ctx.get());
}

std::string FileSha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  DigestCtx ctx = NewSha256();
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<size_t>(in.gcount()));
  }
  return Finish(ctx.get());
}

nlohmann::ordered_json BuildManifest(const ManifestInputs& inputs,
                                     std::span<const Sample> samples,
                                     const std::string& digest) {
  std::array<std::size_t, kAllTasks.size()> per_task{};
  for (const Sample& s : samples) ++per_task[static_cast<std::size_t>(s.task)];
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (TaskId t : kAllTasks) {
    const std::size_t n = per_task[static_cast<std::size_t>(t)];
    if (n > 0) counts[std::string(TaskName(t))] = n;
  }
  nlohmann::ordered_json out;
  out["tool_version"] = std::string(kToolVersion);
  out["master_seed"] = inputs.master_seed;
  out["spec"] = inputs.spec;
  out["format"] = std::string(DatasetFormatName(inputs.format));
  out["config"] = inputs.config;
  out["counts"] = counts;
  out["total"] = samples.size();
  out["dataset_file"] = inputs.dataset_file;
  out["digest"] = "sha256:" + digest;
  return out;
}

}  // namespace pointer_suite

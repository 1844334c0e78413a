// Copyright 2026 The tsel Authors.
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

#include "tsel/artifacts.hpp"

#include <fstream>

#include "tsel/errors.hpp"

namespace tsel {

ArtifactWriter::ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw DataError("cannot create output directory " + dir_.string() + ": " + ec.message());
}

void ArtifactWriter::write(const std::string& name, std::string_view content) {
  const auto path = dir_ / (name + ".partial");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw DataError("cannot write " + path.string());
  names_.push_back(name);
}

void ArtifactWriter::commit() {
  for (const auto& name : names_) {
    std::error_code ec;
    std::filesystem::rename(dir_ / (name + ".partial"), dir_ / name, ec);
    if (ec) throw DataError("cannot finalize " + (dir_ / name).string() + ": " + ec.message());
  }
  names_.clear();
}

}  // namespace tsel

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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tsel/selection.hpp"

namespace tsel {

// Header `step<TAB>sentence_id<TAB>score`, one row per entry, scores printed
// with six decimals.
void write_ranking_tsv(std::ostream& out, const RankedSelection& ranking);
std::string format_ranking_tsv(const RankedSelection& ranking);

// Throws DataError on a malformed header or row.
RankedSelection read_ranking_tsv(std::istream& in, SeedKind kind = SeedKind::source);
RankedSelection load_ranking_tsv(const std::filesystem::path& path,
                                 SeedKind kind = SeedKind::source);

}  // namespace tsel

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

#include <cstddef>
#include <vector>

#include "tsel/selection.hpp"

namespace tsel {

struct CombineSpec {
  double alpha = 0.5;      // share of the output taken from the source-seed ranking
  std::size_t total_n = 0;
  bool dedup = true;

  void validate() const;
  // floor(total_n * alpha), robust to decimal alpha values such as 0.29.
  std::size_t source_share() const;
};

enum class Origin { source, target };

struct CombinedSelection {
  RankedSelection selection;
  std::vector<Origin> origins;  // parallel to selection.entries
};

// Concatenates the top source_share() entries of `ta_src` with the top
// total_n - source_share() entries of `ta_trg`. With dedup, repeated ids keep
// their first occurrence. Shortfalls (from dedup or short inputs) are refilled
// from the unused tail of `ta_src`, then of `ta_trg`. Steps are renumbered and
// each entry keeps the score from its originating ranking.
CombinedSelection combine_detailed(const RankedSelection& ta_src,
                                   const RankedSelection& ta_trg, const CombineSpec& spec);

RankedSelection combine_rankings(const RankedSelection& ta_src,
                                 const RankedSelection& ta_trg, const CombineSpec& spec);

}  // namespace tsel

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

#include "tsel/combine.hpp"

#include <cmath>
#include <unordered_set>

#include "tsel/errors.hpp"

namespace tsel {

void CombineSpec::validate() const {
  if (total_n == 0) throw ArgumentError("combined size N must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ArgumentError("alpha must lie in [0, 1]");
}

std::size_t CombineSpec::source_share() const {
  const double share = std::floor(static_cast<double>(total_n) * alpha + 1e-9);
  return std::min(total_n, static_cast<std::size_t>(share));
}

CombinedSelection combine_detailed(const RankedSelection& ta_src,
                                   const RankedSelection& ta_trg, const CombineSpec& spec) {
  spec.validate();
  const std::size_t n = spec.total_n;
  const std::size_t src_take = std::min(spec.source_share(), ta_src.size());
  const std::size_t trg_take = std::min(n - spec.source_share(), ta_trg.size());

  CombinedSelection out;
  out.selection.seed_kind = SeedKind::mixed;
  if (src_take == n) out.selection.seed_kind = ta_src.seed_kind;
  if (trg_take == n) out.selection.seed_kind = ta_trg.seed_kind;

  std::unordered_set<SentenceId> seen;
  auto append = [&](const RankedEntry& e, Origin origin) {
    if (out.selection.size() >= n) return;
    if (spec.dedup && !seen.insert(e.sentence_id).second) return;
    out.selection.entries.push_back({e.sentence_id, e.score, out.selection.size() + 1});
    out.origins.push_back(origin);
  };

  for (std::size_t i = 0; i < src_take; ++i) append(ta_src.entries[i], Origin::source);
  for (std::size_t i = 0; i < trg_take; ++i) append(ta_trg.entries[i], Origin::target);
  for (std::size_t i = src_take; i < ta_src.size() && out.selection.size() < n; ++i) {
    append(ta_src.entries[i], Origin::source);
  }
  for (std::size_t i = trg_take; i < ta_trg.size() && out.selection.size() < n; ++i) {
    append(ta_trg.entries[i], Origin::target);
  }
  return out;
}

RankedSelection combine_rankings(const RankedSelection& ta_src,
                                 const RankedSelection& ta_trg, const CombineSpec& spec) {
  return combine_detailed(ta_src, ta_trg, spec).selection;
}

}  // namespace tsel

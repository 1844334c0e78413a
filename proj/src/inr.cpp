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

#include "tsel/inr.hpp"

#include "tsel/errors.hpp"

namespace tsel {

void InrConfig::validate() const {
  if (threshold < 1) throw ArgumentError("INR threshold must be >= 1");
}

double inr_score(const FeatureIndex& index, SentenceId id, std::span<const Count> counts,
                 const InrConfig& cfg) {
  Count sum = 0;
  for (const auto& fc : index.features_of(id)) {
    const Count c = counts[fc.feature];
    if (c < cfg.threshold) sum += cfg.threshold - c;
  }
  return static_cast<double>(sum);
}

InrScorer::InrScorer(const FeatureIndex& index, InrConfig cfg)
    : index_(index), cfg_(std::move(cfg)) {
  cfg_.validate();
}

double InrScorer::score(SentenceId id, const SelectionState& state) const {
  return inr_score(index_, id, state.counts(), cfg_);
}

std::vector<Count> init_counts_from_corpus(const Corpus& init_set, const FeatureSet& seed) {
  return count_occurrences(seed, init_set);
}

}  // namespace tsel

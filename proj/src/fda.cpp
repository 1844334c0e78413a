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

#include "tsel/fda.hpp"

#include <cmath>

#include "tsel/errors.hpp"

namespace tsel {

void FdaConfig::validate() const {
  if (!(decay_base > 0.0 && decay_base < 1.0)) {
    throw ArgumentError("decay base must lie strictly between 0 and 1");
  }
}

double fda_score(const FeatureIndex& index, SentenceId id, std::span<const Count> counts,
                 const FdaConfig& cfg) {
  const std::size_t len = index.length(id);
  if (len == 0) return 0.0;
  double sum = 0.0;
  for (const auto& fc : index.features_of(id)) {
    sum += fc.count * std::pow(cfg.decay_base, static_cast<double>(counts[fc.feature]));
  }
  return cfg.length_normalize ? sum / static_cast<double>(len) : sum;
}

FdaScorer::FdaScorer(const FeatureIndex& index, FdaConfig cfg)
    : index_(index), cfg_(cfg) {
  cfg_.validate();
  constexpr std::size_t kTableSize = 128;
  decay_table_.resize(kTableSize);
  for (std::size_t c = 0; c < kTableSize; ++c) {
    decay_table_[c] = std::pow(cfg_.decay_base, static_cast<double>(c));
  }
}

double FdaScorer::decay(Count c) const {
  return c < decay_table_.size() ? decay_table_[c]
                                 : std::pow(cfg_.decay_base, static_cast<double>(c));
}

double FdaScorer::score(SentenceId id, const SelectionState& state) const {
  const std::size_t len = index_.length(id);
  if (len == 0) return 0.0;
  const auto counts = state.counts();
  double sum = 0.0;
  for (const auto& fc : index_.features_of(id)) sum += fc.count * decay(counts[fc.feature]);
  return cfg_.length_normalize ? sum / static_cast<double>(len) : sum;
}

}  // namespace tsel

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

#include <span>
#include <vector>

#include "tsel/selection.hpp"

namespace tsel {

struct FdaConfig {
  double decay_base = 0.5;      // in (0, 1)
  bool length_normalize = true;

  // Throws ArgumentError unless 0 < decay_base < 1.
  void validate() const;
};

// Feature decay score: every occurrence of a seed n-gram in the sentence adds
// decay_base^count, where count is how often that n-gram is already in the
// selected pool; the sum is divided by the sentence length when normalizing.
// Empty sentences score 0.
double fda_score(const FeatureIndex& index, SentenceId id, std::span<const Count> counts,
                 const FdaConfig& cfg);

class FdaScorer final : public Scorer {
 public:
  FdaScorer(const FeatureIndex& index, FdaConfig cfg);

  double score(SentenceId id, const SelectionState& state) const override;

 private:
  double decay(Count c) const;

  const FeatureIndex& index_;
  FdaConfig cfg_;
  std::vector<double> decay_table_;
};

}  // namespace tsel

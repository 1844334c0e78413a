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
#include <optional>
#include <span>
#include <vector>

#include "tsel/selection.hpp"

namespace tsel {

struct InrConfig {
  Count threshold = 0;  // typical values: 80 (news), 640 (biomedical)
  std::optional<std::filesystem::path> init_set_path;

  // Throws ArgumentError unless threshold >= 1.
  void validate() const;
};

// Infrequent n-gram recovery score: each distinct seed n-gram type in the
// sentence adds max(0, threshold - count). Repeats inside the sentence do not
// add more.
double inr_score(const FeatureIndex& index, SentenceId id, std::span<const Count> counts,
                 const InrConfig& cfg);

class InrScorer final : public Scorer {
 public:
  InrScorer(const FeatureIndex& index, InrConfig cfg);

  double score(SentenceId id, const SelectionState& state) const override;

 private:
  const FeatureIndex& index_;
  InrConfig cfg_;
};

// Seed feature counts over an in-domain initialization corpus.
std::vector<Count> init_counts_from_corpus(const Corpus& init_set, const FeatureSet& seed);

}  // namespace tsel

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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsel/features.hpp"
#include "tsel/selection.hpp"

namespace tsel {

struct OrderCoverage {
  std::size_t order = 0;
  std::size_t seed_types = 0;
  std::size_t covered_types = 0;
  double coverage_ratio = 0.0;
  // (bucket label, number of seed types whose occurrence count falls in it);
  // buckets are 0, 1, 2-3, 4-7, ...
  std::vector<std::pair<std::string, std::size_t>> occurrence_histogram;
};

struct CoverageReport {
  std::vector<OrderCoverage> per_order;  // orders 1..max_order
  std::optional<Count> saturation_threshold;
  std::optional<std::size_t> saturated_types;
  std::size_t selection_size = 0;
  std::size_t token_count = 0;
};

// Type coverage of the seed n-grams by a selection.
CoverageReport coverage(const FeatureSet& seed, std::span<const TokenizedSentence> selection,
                        std::optional<Count> saturation_threshold = std::nullopt);
CoverageReport coverage(const FeatureSet& seed, const Corpus& selection,
                        std::optional<Count> saturation_threshold = std::nullopt);
CoverageReport coverage(const FeatureSet& seed, const Corpus& corpus,
                        std::span<const SentenceId> ids,
                        std::optional<Count> saturation_threshold = std::nullopt);

nlohmann::ordered_json to_json(const CoverageReport& report);
std::string render_table(const CoverageReport& report);

}  // namespace tsel

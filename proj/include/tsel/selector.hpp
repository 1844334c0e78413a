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
#include <functional>
#include <string>
#include <string_view>

#include "tsel/corpus.hpp"
#include "tsel/fda.hpp"
#include "tsel/inr.hpp"
#include "tsel/selection.hpp"

namespace tsel {

enum class Algorithm { fda, inr };

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algorithm);

using ProgressFn = std::function<void(const std::string&)>;

struct SelectorConfig {
  Algorithm algorithm = Algorithm::fda;
  std::size_t budget = 0;
  std::size_t max_order = 3;
  FdaConfig fda;
  InrConfig inr;
  SeedKind seed_kind = SeedKind::source;
  ProgressFn progress;

  void validate() const;
};

struct SelectorOutput {
  RankedSelection ranking;
  std::size_t seed_features = 0;
  std::size_t indexed_sentences = 0;
};

// Extracts the seed n-grams, indexes `candidates` and runs the configured
// scorer. `init_set` (nullable) seeds the INR counts.
SelectorOutput select_sentences(const Corpus& candidates, const Corpus& seed,
                                const SelectorConfig& cfg, const Corpus* init_set = nullptr);

}  // namespace tsel

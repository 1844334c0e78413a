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

#include "tsel/selector.hpp"

#include "tsel/errors.hpp"

namespace tsel {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "fda") return Algorithm::fda;
  if (name == "inr") return Algorithm::inr;
  throw ArgumentError("unknown algorithm '" + std::string(name) + "' (expected fda or inr)");
}

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::fda ? "fda" : "inr";
}

void SelectorConfig::validate() const {
  if (budget == 0) throw ArgumentError("selection budget must be >= 1");
  if (max_order == 0) throw ArgumentError("max order must be >= 1");
  if (algorithm == Algorithm::fda) {
    fda.validate();
  } else {
    inr.validate();
  }
}

SelectorOutput select_sentences(const Corpus& candidates, const Corpus& seed,
                                const SelectorConfig& cfg, const Corpus* init_set) {
  cfg.validate();
  auto report = [&](const std::string& msg) {
    if (cfg.progress) cfg.progress(msg);
  };

  FeatureSet features = extract_features(seed, cfg.max_order);
  report("seed: " + std::to_string(seed.size()) + " sentences, " +
         std::to_string(features.size()) + " n-gram types");
  const FeatureIndex index = build_index(candidates, std::move(features));
  report("index: " + std::to_string(index.indexed_sentence_count()) + " of " +
         std::to_string(candidates.size()) + " candidates share seed n-grams");

  std::vector<Count> init;
  if (cfg.algorithm == Algorithm::inr && init_set != nullptr) {
    init = init_counts_from_corpus(*init_set, index.seed());
  }

  SelectionOptions options;
  options.seed_kind = cfg.seed_kind;
  if (cfg.progress) {
    const std::size_t every = std::max<std::size_t>(10000, cfg.budget / 10);
    options.on_step = [&, every](std::size_t n) {
      if (n % every == 0) report("selected " + std::to_string(n) + " sentences");
    };
  }

  SelectorOutput out;
  out.seed_features = index.seed().size();
  out.indexed_sentences = index.indexed_sentence_count();
  if (cfg.algorithm == Algorithm::fda) {
    FdaScorer scorer(index, cfg.fda);
    out.ranking = run_selection(index, scorer, cfg.budget, std::move(init), options);
  } else {
    InrScorer scorer(index, cfg.inr);
    out.ranking = run_selection(index, scorer, cfg.budget, std::move(init), options);
  }
  report("selection: " + std::to_string(out.ranking.size()) + " sentences");
  return out;
}

}  // namespace tsel

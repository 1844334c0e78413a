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

#include <string>
#include <string_view>
#include <vector>

#include "tsel/corpus.hpp"
#include "tsel/selector.hpp"
#include "tsel/translator.hpp"

namespace tsel {

enum class PipelineMode { batch, online };

PipelineMode parse_pipeline_mode(std::string_view name);
std::string_view to_string(PipelineMode mode);

inline constexpr std::string_view kSeedTranslationStage = "seed_translation";
inline constexpr std::string_view kBackTranslationStage = "back_translation";

struct PipelineConfig {
  PipelineMode mode = PipelineMode::batch;
  SelectorConfig selector;
};

struct SentencePair {
  std::string source;
  std::string target;

  bool operator==(const SentencePair&) const = default;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct PipelineResult {
  RankedSelection ranking;          // ids index the monolingual / synthetic corpus
  std::vector<SentencePair> pairs;  // in selection order
  std::vector<std::string> seed;    // seed lines actually used for selection
  std::size_t seed_features = 0;
  std::vector<StageTiming> timings;
};

// Selects from an already back-translated corpus using the source-language
// test set as seed, matching against the synthetic source side.
PipelineResult run_batch(const PipelineConfig& cfg, const ParallelCorpus& synthetic,
                         const Corpus& test_set, const Corpus* init_set = nullptr);

// Back-translates all of `mono_target` first, then runs the batch selection.
PipelineResult run_batch(const PipelineConfig& cfg, const Corpus& mono_target,
                         const Corpus& test_set, Translator& back_translator,
                         const Corpus* init_set = nullptr);

// Translates the test set into the target language to obtain a seed, selects
// from `mono_target`, and back-translates only the selected sentences. Output
// pairs are (back-translated source, authentic target).
PipelineResult run_online(const PipelineConfig& cfg, const Corpus& mono_target,
                          const Corpus& test_set, Translator& forward_translator,
                          Translator& back_translator, const Corpus* init_set = nullptr);

}  // namespace tsel

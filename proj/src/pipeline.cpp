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

#include "tsel/pipeline.hpp"

#include <chrono>

#include "tsel/errors.hpp"

namespace tsel {
namespace {

class StageClock {
 public:
  StageClock(std::vector<StageTiming>& sink, std::string stage)
      : sink_(sink), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~StageClock() {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    sink_.push_back({stage_, d.count()});
  }

 private:
  std::vector<StageTiming>& sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

PipelineMode parse_pipeline_mode(std::string_view name) {
  if (name == "batch") return PipelineMode::batch;
  if (name == "online") return PipelineMode::online;
  throw ArgumentError("unknown pipeline mode '" + std::string(name) + "'");
}

std::string_view to_string(PipelineMode mode) {
  return mode == PipelineMode::batch ? "batch" : "online";
}

PipelineResult run_batch(const PipelineConfig& cfg, const ParallelCorpus& synthetic,
                         const Corpus& test_set, const Corpus* init_set) {
  if (synthetic.source.size() != synthetic.target.size()) {
    throw DataError("synthetic parallel corpus is misaligned");
  }
  PipelineResult result;
  SelectorConfig sel = cfg.selector;
  sel.seed_kind = SeedKind::source;
  {
    StageClock clock(result.timings, "selection");
    auto out = select_sentences(synthetic.source, test_set, sel, init_set);
    result.ranking = std::move(out.ranking);
    result.seed_features = out.seed_features;
  }
  result.seed = test_set.lines();
  result.pairs.reserve(result.ranking.size());
  for (const auto& e : result.ranking.entries) {
    result.pairs.push_back(
        {synthetic.source.line(e.sentence_id), synthetic.target.line(e.sentence_id)});
  }
  return result;
}

PipelineResult run_batch(const PipelineConfig& cfg, const Corpus& mono_target,
                         const Corpus& test_set, Translator& back_translator,
                         const Corpus* init_set) {
  std::vector<StageTiming> timings;
  Corpus synthetic_source;
  {
    StageClock clock(timings, std::string(kBackTranslationStage));
    const auto lines = mono_target.lines();
    synthetic_source = Corpus::from_lines(back_translator.translate(lines, kBackTranslationStage));
  }
  // Keep line alignment even when a translation is empty.
  auto synthetic = ParallelCorpus::from_sides(std::move(synthetic_source), mono_target);
  PipelineResult result = run_batch(cfg, synthetic, test_set, init_set);
  timings.insert(timings.end(), result.timings.begin(), result.timings.end());
  result.timings = std::move(timings);
  return result;
}

PipelineResult run_online(const PipelineConfig& cfg, const Corpus& mono_target,
                          const Corpus& test_set, Translator& forward_translator,
                          Translator& back_translator, const Corpus* init_set) {
  PipelineResult result;
  Corpus seed;
  {
    StageClock clock(result.timings, std::string(kSeedTranslationStage));
    const auto lines = test_set.lines();
    result.seed = forward_translator.translate(lines, kSeedTranslationStage);
    seed = Corpus::from_lines(result.seed);
  }

  SelectorConfig sel = cfg.selector;
  sel.seed_kind = SeedKind::approx_target;
  {
    StageClock clock(result.timings, "selection");
    auto out = select_sentences(mono_target, seed, sel, init_set);
    result.ranking = std::move(out.ranking);
    result.seed_features = out.seed_features;
  }

  std::vector<std::string> targets;
  targets.reserve(result.ranking.size());
  for (const auto& e : result.ranking.entries) targets.push_back(mono_target.line(e.sentence_id));
  std::vector<std::string> sources;
  {
    StageClock clock(result.timings, std::string(kBackTranslationStage));
    sources = back_translator.translate(targets, kBackTranslationStage);
  }
  result.pairs.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    result.pairs.push_back({std::move(sources[i]), std::move(targets[i])});
  }
  return result;
}

}  // namespace tsel

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
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "tsel/corpus.hpp"
#include "tsel/features.hpp"

namespace tsel {

using Count = std::uint64_t;

enum class SeedKind { source, approx_target, mixed };

std::string_view to_string(SeedKind kind);
SeedKind parse_seed_kind(std::string_view name);

struct RankedEntry {
  SentenceId sentence_id = 0;
  double score = 0.0;    // score at the step the sentence was chosen
  std::size_t step = 0;  // 1-based

  bool operator==(const RankedEntry&) const = default;
};

struct RankedSelection {
  std::vector<RankedEntry> entries;
  SeedKind seed_kind = SeedKind::source;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::vector<SentenceId> ids() const;

  bool operator==(const RankedSelection&) const = default;
};

// The selected pool, the candidate pool, and running n-gram counts over the
// initialization set plus everything selected so far. Counts are kept for
// seed features only, indexed by FeatureId.
class SelectionState {
 public:
  // `init_counts` is either empty (all zero) or has one entry per seed feature.
  SelectionState(const FeatureIndex& index, std::vector<Count> init_counts = {});

  std::span<const SentenceId> selected() const { return selected_; }
  std::span<const Count> counts() const { return counts_; }
  Count count(FeatureId f) const { return counts_[f]; }
  bool is_remaining(SentenceId id) const { return remaining_[id] != 0; }
  std::size_t remaining_count() const { return remaining_count_; }

  // Moves `id` from the candidate pool into the selected pool.
  void select(SentenceId id);

 private:
  const FeatureIndex* index_;
  std::vector<SentenceId> selected_;
  std::vector<Count> counts_;
  std::vector<std::uint8_t> remaining_;
  std::size_t remaining_count_ = 0;
};

// Sentence scoring under the current state. Implementations must be
// non-increasing in every count, which makes any earlier score of a sentence an
// upper bound on its current score.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double score(SentenceId id, const SelectionState& state) const = 0;
};

struct SelectionOptions {
  SeedKind seed_kind = SeedKind::source;
  // Called whenever a cached queue entry is re-scored.
  std::function<void(SentenceId, double cached, double fresh)> on_revalidate;
  // Called after each selection step with the number of sentences chosen.
  std::function<void(std::size_t)> on_step;
};

// Scores within this relative distance of the step maximum are treated as
// equal, so rounding in the summation order cannot decide a tie.
inline constexpr double kTieTolerance = 1e-12;

// Greedy selection with lazy re-scoring. At every step picks the remaining
// candidate of highest score (lowest id among ties), stopping at `budget` or
// when no candidate scores above zero. Throws ArgumentError if budget == 0.
RankedSelection run_selection(const FeatureIndex& index, const Scorer& scorer,
                              std::size_t budget, std::vector<Count> init_counts = {},
                              const SelectionOptions& options = {});

struct ScoredSentence {
  SentenceId id;
  double score;
};

// Exact score of every remaining candidate, in id order.
std::vector<ScoredSentence> recompute_all_scores(const FeatureIndex& index,
                                                 const Scorer& scorer,
                                                 const SelectionState& state);

}  // namespace tsel

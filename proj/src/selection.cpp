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

#include "tsel/selection.hpp"

#include <queue>
#include <string>

#include "tsel/errors.hpp"

namespace tsel {

std::string_view to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::source:
      return "source";
    case SeedKind::approx_target:
      return "approx-target";
    case SeedKind::mixed:
      return "mixed";
  }
  return "source";
}

SeedKind parse_seed_kind(std::string_view name) {
  if (name == "source") return SeedKind::source;
  if (name == "approx-target") return SeedKind::approx_target;
  if (name == "mixed") return SeedKind::mixed;
  throw ArgumentError("unknown seed kind '" + std::string(name) + "'");
}

std::vector<SentenceId> RankedSelection::ids() const {
  std::vector<SentenceId> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.sentence_id);
  return out;
}

SelectionState::SelectionState(const FeatureIndex& index, std::vector<Count> init_counts)
    : index_(&index), counts_(std::move(init_counts)) {
  if (counts_.empty()) counts_.assign(index.seed().size(), 0);
  if (counts_.size() != index.seed().size()) {
    throw ArgumentError("initial counts do not match the seed feature set");
  }
  remaining_.assign(index.sentence_count(), 1);
  remaining_count_ = index.sentence_count();
}

void SelectionState::select(SentenceId id) {
  if (!remaining_[id]) {
    throw ArgumentError("sentence " + std::to_string(id) + " is not a candidate");
  }
  remaining_[id] = 0;
  --remaining_count_;
  selected_.push_back(id);
  for (const auto& fc : index_->features_of(id)) counts_[fc.feature] += fc.count;
}

namespace {

struct QueueEntry {
  double score;
  SentenceId id;
};

// Max-heap on score; on equal scores the lower id is on top.
struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.id > b.id;
  }
};

bool is_tie(double score, double best) { return best - score <= kTieTolerance * best; }

}  // namespace

RankedSelection run_selection(const FeatureIndex& index, const Scorer& scorer,
                              std::size_t budget, std::vector<Count> init_counts,
                              const SelectionOptions& options) {
  if (budget == 0) throw ArgumentError("selection budget must be >= 1");

  SelectionState state(index, std::move(init_counts));
  RankedSelection result;
  result.seed_kind = options.seed_kind;

  std::vector<QueueEntry> initial;
  initial.reserve(index.indexed_sentence_count());
  for (SentenceId id = 0; id < index.sentence_count(); ++id) {
    if (index.features_of(id).empty()) continue;
    const double s = scorer.score(id, state);
    if (s > 0.0) initial.push_back({s, id});
  }
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue(
      QueueOrder{}, std::move(initial));

  std::vector<QueueEntry> near;
  while (result.entries.size() < budget && !queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    const double fresh = scorer.score(top.id, state);
    if (options.on_revalidate) options.on_revalidate(top.id, top.score, fresh);
    if (fresh != top.score) {
      // Scores only decay, and a zero score can never recover.
      if (fresh > 0.0) queue.push({fresh, top.id});
      continue;
    }
    // `fresh` is the current maximum. Anything within tolerance of it counts
    // as tied, and the lowest id among the tied sentences is selected.
    QueueEntry pick = top;
    near.clear();
    while (!queue.empty() && is_tie(queue.top().score, fresh)) {
      const QueueEntry e = queue.top();
      queue.pop();
      const double s = scorer.score(e.id, state);
      if (options.on_revalidate) options.on_revalidate(e.id, e.score, s);
      if (!(s > 0.0)) continue;
      if (is_tie(s, fresh) && e.id < pick.id) {
        near.push_back(pick);
        pick = {s, e.id};
      } else {
        near.push_back({s, e.id});
      }
    }
    for (const auto& e : near) queue.push(e);

    state.select(pick.id);
    result.entries.push_back({pick.id, pick.score, result.entries.size() + 1});
    if (options.on_step) options.on_step(result.entries.size());
  }
  return result;
}

std::vector<ScoredSentence> recompute_all_scores(const FeatureIndex& index,
                                                 const Scorer& scorer,
                                                 const SelectionState& state) {
  std::vector<ScoredSentence> out;
  out.reserve(state.remaining_count());
  for (SentenceId id = 0; id < index.sentence_count(); ++id) {
    if (state.is_remaining(id)) out.push_back({id, scorer.score(id, state)});
  }
  return out;
}

}  // namespace tsel

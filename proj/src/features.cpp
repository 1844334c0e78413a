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

#include "tsel/features.hpp"

#include <thread>

#include "tsel/errors.hpp"

namespace tsel {

std::string NgramFeature::text() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

FeatureSet::FeatureSet(std::size_t max_order) : max_order_(max_order) {
  if (max_order == 0) throw ArgumentError("max_order must be >= 1");
}

NgramFeature FeatureSet::feature(FeatureId id) const {
  NgramFeature out;
  out.tokens.resize(nodes_[id].order);
  std::uint64_t cur = id;
  for (std::size_t i = out.tokens.size(); i-- > 0;) {
    const Node& node = nodes_[cur];
    out.tokens[i] = vocab_strings_[node.token];
    cur = node.parent;
  }
  return out;
}

std::optional<FeatureId> FeatureSet::find(std::span<const std::string_view> ngram) const {
  if (ngram.empty() || ngram.size() > max_order_) return std::nullopt;
  std::uint64_t parent = kRoot;
  for (auto tok : ngram) {
    auto t = vocab_.find(tok);
    if (t == vocab_.end()) return std::nullopt;
    auto child = children_.find(key(parent, t->second));
    if (child == children_.end()) return std::nullopt;
    parent = child->second;
  }
  return static_cast<FeatureId>(parent);
}

std::optional<FeatureId> FeatureSet::find(const NgramFeature& ngram) const {
  std::vector<std::string_view> views(ngram.tokens.begin(), ngram.tokens.end());
  return find(views);
}

FeatureId FeatureSet::insert(std::span<const std::string_view> ngram) {
  if (ngram.empty() || ngram.size() > max_order_) {
    throw ArgumentError("n-gram order must lie in [1, max_order]");
  }
  std::uint64_t parent = kRoot;
  for (std::size_t pos = 0; pos < ngram.size(); ++pos) {
    auto [tok, fresh_token] = vocab_.try_emplace(std::string(ngram[pos]),
                                                 static_cast<TokenId>(vocab_strings_.size()));
    if (fresh_token) vocab_strings_.push_back(tok->first);
    auto [child, fresh] =
        children_.try_emplace(key(parent, tok->second), static_cast<FeatureId>(nodes_.size()));
    if (fresh) nodes_.push_back({parent, tok->second, static_cast<std::uint32_t>(pos + 1)});
    parent = child->second;
  }
  return static_cast<FeatureId>(parent);
}

void FeatureSet::insert_all(std::span<const std::string_view> tokens) {
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    std::uint64_t parent = kRoot;
    const std::size_t stop = std::min(tokens.size(), start + max_order_);
    for (std::size_t pos = start; pos < stop; ++pos) {
      auto [tok, fresh_token] = vocab_.try_emplace(
          std::string(tokens[pos]), static_cast<TokenId>(vocab_strings_.size()));
      if (fresh_token) vocab_strings_.push_back(tok->first);
      auto [child, fresh] = children_.try_emplace(
          key(parent, tok->second), static_cast<FeatureId>(nodes_.size()));
      if (fresh) {
        nodes_.push_back({parent, tok->second, static_cast<std::uint32_t>(pos - start + 1)});
      }
      parent = child->second;
    }
  }
}

FeatureSet extract_features(const Corpus& text, std::size_t max_order) {
  FeatureSet set(max_order);
  for (SentenceId i = 0; i < text.size(); ++i) set.insert_all(text[i].tokens);
  return set;
}

namespace {

struct Chunk {
  std::vector<std::size_t> sizes;  // entries per sentence
  std::vector<FeatureCount> entries;
};

void index_range(const Corpus& corpus, const FeatureSet& seed, SentenceId begin,
                 SentenceId end, Chunk& out) {
  std::vector<FeatureId> matches;
  out.sizes.reserve(end - begin);
  for (SentenceId id = begin; id < end; ++id) {
    matches.clear();
    seed.for_each_match(corpus[id].tokens, [&](FeatureId f) { matches.push_back(f); });
    std::sort(matches.begin(), matches.end());
    const std::size_t before = out.entries.size();
    for (std::size_t i = 0; i < matches.size();) {
      std::size_t j = i;
      while (j < matches.size() && matches[j] == matches[i]) ++j;
      out.entries.push_back({matches[i], static_cast<std::uint32_t>(j - i)});
      i = j;
    }
    out.sizes.push_back(out.entries.size() - before);
  }
}

}  // namespace

FeatureIndex::FeatureIndex(const Corpus& candidates, FeatureSet seed)
    : seed_(std::move(seed)) {
  const std::size_t n = candidates.size();
  lengths_.resize(n);
  for (SentenceId i = 0; i < n; ++i) {
    lengths_[i] = static_cast<std::uint32_t>(candidates[i].length());
  }

  constexpr std::size_t kMinPerThread = 20000;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads = std::clamp<std::size_t>(n / kMinPerThread, 1, hw);
  std::vector<Chunk> chunks(threads);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      const auto begin = static_cast<SentenceId>(n * t / threads);
      const auto end = static_cast<SentenceId>(n * (t + 1) / threads);
      if (threads == 1) {
        index_range(candidates, seed_, begin, end, chunks[t]);
      } else {
        workers.emplace_back([&, begin, end, t] {
          index_range(candidates, seed_, begin, end, chunks[t]);
        });
      }
    }
  }

  entry_offsets_.reserve(n + 1);
  entry_offsets_.push_back(0);
  std::size_t total = 0;
  for (const auto& c : chunks) total += c.entries.size();
  entries_.reserve(total);
  for (auto& c : chunks) {
    for (std::size_t s : c.sizes) {
      entry_offsets_.push_back(entry_offsets_.back() + s);
      if (s > 0) ++indexed_sentences_;
    }
    entries_.insert(entries_.end(), c.entries.begin(), c.entries.end());
    c = Chunk{};
  }

  // Sentences are visited in id order, so each posting list comes out sorted.
  posting_offsets_.assign(seed_.size() + 1, 0);
  for (const auto& e : entries_) ++posting_offsets_[e.feature + 1];
  for (std::size_t f = 0; f < seed_.size(); ++f) {
    posting_offsets_[f + 1] += posting_offsets_[f];
  }
  posting_ids_.resize(entries_.size());
  std::vector<std::size_t> cursor(posting_offsets_.begin(), posting_offsets_.end() - 1);
  for (SentenceId id = 0; id < n; ++id) {
    for (const auto& e : features_of(id)) posting_ids_[cursor[e.feature]++] = id;
  }
}

FeatureIndex build_index(const Corpus& candidates, FeatureSet seed_features) {
  return FeatureIndex(candidates, std::move(seed_features));
}

std::vector<std::uint64_t> count_occurrences(const FeatureSet& seed, const Corpus& text) {
  std::vector<std::uint64_t> counts(seed.size(), 0);
  for (SentenceId i = 0; i < text.size(); ++i) {
    seed.for_each_match(text[i].tokens, [&](FeatureId f) { ++counts[f]; });
  }
  return counts;
}

}  // namespace tsel

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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsel/corpus.hpp"

namespace tsel {

using FeatureId = std::uint32_t;
using TokenId = std::uint32_t;

// An n-gram of 1..max_order tokens, compared by exact token sequence.
struct NgramFeature {
  std::vector<std::string> tokens;

  std::size_t order() const { return tokens.size(); }
  std::string text() const;

  auto operator<=>(const NgramFeature&) const = default;
};

// The distinct n-grams of a seed text, stored as a prefix trie. Every prefix of
// a seed n-gram is itself a seed n-gram, so each trie node is a feature and
// matching a candidate position stops at the first unknown extension.
class FeatureSet {
 public:
  explicit FeatureSet(std::size_t max_order = 3);

  std::size_t max_order() const { return max_order_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t order(FeatureId id) const { return nodes_[id].order; }
  NgramFeature feature(FeatureId id) const;

  std::optional<FeatureId> find(std::span<const std::string_view> ngram) const;
  std::optional<FeatureId> find(const NgramFeature& ngram) const;
  bool contains(const NgramFeature& ngram) const { return find(ngram).has_value(); }

  // Adds one n-gram together with its prefixes; returns its id.
  FeatureId insert(std::span<const std::string_view> ngram);
  // Adds every n-gram of orders 1..max_order found in `tokens`.
  void insert_all(std::span<const std::string_view> tokens);

  // Calls visit(FeatureId) once per occurrence of a seed n-gram in `tokens`.
  template <class Visit>
  void for_each_match(std::span<const std::string_view> tokens, Visit&& visit) const {
    for (std::size_t start = 0; start < tokens.size(); ++start) {
      std::uint64_t parent = kRoot;
      const std::size_t stop = std::min(tokens.size(), start + max_order_);
      for (std::size_t pos = start; pos < stop; ++pos) {
        auto tok = vocab_.find(tokens[pos]);
        if (tok == vocab_.end()) break;
        auto child = children_.find(key(parent, tok->second));
        if (child == children_.end()) break;
        visit(child->second);
        parent = child->second;
      }
    }
  }

 private:
  static constexpr std::uint64_t kRoot = 0xFFFFFFFFull;
  static std::uint64_t key(std::uint64_t parent, TokenId token) {
    return (parent << 32) | token;
  }

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  struct Node {
    std::uint64_t parent;  // kRoot for unigrams
    TokenId token;
    std::uint32_t order;
  };

  std::size_t max_order_;
  std::unordered_map<std::string, TokenId, StringHash, std::equal_to<>> vocab_;
  std::vector<std::string> vocab_strings_;
  std::unordered_map<std::uint64_t, FeatureId> children_;
  std::vector<Node> nodes_;
};

// All distinct n-grams of orders 1..max_order occurring in `text`.
FeatureSet extract_features(const Corpus& text, std::size_t max_order);

struct FeatureCount {
  FeatureId feature;
  std::uint32_t count;  // occurrences within the sentence
};

// Seed-filtered inverted index over a candidate corpus. Immutable after
// construction and safe for concurrent reads.
class FeatureIndex {
 public:
  FeatureIndex(const Corpus& candidates, FeatureSet seed);

  const FeatureSet& seed() const { return seed_; }
  std::size_t sentence_count() const { return lengths_.size(); }
  std::size_t length(SentenceId id) const { return lengths_[id]; }

  // Seed n-grams of a sentence with multiplicities, ordered by feature id.
  std::span<const FeatureCount> features_of(SentenceId id) const {
    return std::span<const FeatureCount>(entries_).subspan(
        entry_offsets_[id], entry_offsets_[id + 1] - entry_offsets_[id]);
  }

  // Sorted ids of candidate sentences containing `feature`.
  std::span<const SentenceId> postings(FeatureId feature) const {
    return std::span<const SentenceId>(posting_ids_).subspan(
        posting_offsets_[feature],
        posting_offsets_[feature + 1] - posting_offsets_[feature]);
  }

  // Number of candidates sharing at least one seed n-gram.
  std::size_t indexed_sentence_count() const { return indexed_sentences_; }
  std::size_t posting_count() const { return posting_ids_.size(); }

 private:
  FeatureSet seed_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::size_t> entry_offsets_;
  std::vector<FeatureCount> entries_;
  std::vector<std::size_t> posting_offsets_;
  std::vector<SentenceId> posting_ids_;
  std::size_t indexed_sentences_ = 0;
};

FeatureIndex build_index(const Corpus& candidates, FeatureSet seed_features);

// Occurrence counts of every seed feature across `text`, indexed by FeatureId.
std::vector<std::uint64_t> count_occurrences(const FeatureSet& seed, const Corpus& text);

}  // namespace tsel

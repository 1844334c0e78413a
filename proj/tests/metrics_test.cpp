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

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tsel/metrics.hpp"
#include "tsel/selector.hpp"

namespace tsel {
namespace {

TEST(Coverage, EmptySelectionCoversNothing) {
  const auto seed = extract_features(testing::make_corpus({"a b c", "d"}), 3);
  const auto r = coverage(seed, Corpus{});
  ASSERT_EQ(r.per_order.size(), 3u);
  for (const auto& oc : r.per_order) {
    EXPECT_EQ(oc.covered_types, 0u);
    EXPECT_EQ(oc.coverage_ratio, 0.0);
  }
  EXPECT_EQ(r.per_order[0].seed_types, 4u);
  EXPECT_EQ(r.per_order[1].seed_types, 2u);
  EXPECT_EQ(r.per_order[2].seed_types, 1u);
}

TEST(Coverage, SeedCoversItselfCompletely) {
  std::mt19937_64 rng(1);
  const auto text = testing::make_corpus(testing::random_sentences(rng, 30, 20));
  const auto seed = extract_features(text, 3);
  for (const auto& oc : coverage(seed, text).per_order) EXPECT_EQ(oc.coverage_ratio, 1.0);
}

TEST(Coverage, RatiosMatchBruteForce) {
  std::mt19937_64 rng(2);
  const auto seed_text = testing::random_sentences(rng, 10, 25);
  const auto sel = testing::random_sentences(rng, 40, 25);
  const auto seed = extract_features(testing::make_corpus(seed_text), 3);
  const auto r = coverage(seed, testing::make_corpus(sel));
  const auto seed_grams = testing::brute_ngrams(seed_text, 3);
  const auto sel_grams = testing::brute_ngrams(sel, 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::size_t types = 0, covered = 0;
    for (const auto& g : seed_grams) {
      if (g.size() != k) continue;
      ++types;
      covered += sel_grams.count(g);
    }
    EXPECT_EQ(r.per_order[k - 1].seed_types, types);
    EXPECT_EQ(r.per_order[k - 1].covered_types, covered);
  }
}

TEST(Coverage, HistogramBucketsAndSaturation) {
  const auto seed = extract_features(testing::make_corpus({"a b c"}), 1);
  // a:1, b:3, c:0
  const auto r = coverage(seed, testing::make_corpus({"a b", "b b x"}), Count{2});
  const auto& hist = r.per_order[0].occurrence_histogram;
  ASSERT_EQ(hist.size(), 3u);
  EXPECT_EQ(hist[0], (std::pair<std::string, std::size_t>{"0", 1}));
  EXPECT_EQ(hist[1], (std::pair<std::string, std::size_t>{"1", 1}));
  EXPECT_EQ(hist[2], (std::pair<std::string, std::size_t>{"2-3", 1}));
  EXPECT_EQ(r.saturated_types, 1u);
  EXPECT_EQ(r.token_count, 5u);
  EXPECT_EQ(r.selection_size, 2u);
}

TEST(Coverage, IdSubsetOverloadMatchesMaterializedCorpus) {
  const auto corpus = testing::make_corpus({"a b", "c d", "a c", "e"});
  const auto seed = extract_features(testing::make_corpus({"a c e"}), 2);
  const std::vector<SentenceId> ids{2, 3};
  const auto a = to_json(coverage(seed, corpus, ids));
  const auto b = to_json(coverage(seed, testing::make_corpus({"a c", "e"})));
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Coverage, NonDecreasingAlongRankingPrefixes) {
  std::mt19937_64 rng(3);
  const auto fx = testing::two_domain_mixture(rng, 400, 30, 80);
  const auto pool = testing::make_corpus(fx.pool);
  const auto seed_corpus = testing::make_corpus(fx.seed);
  SelectorConfig cfg;
  cfg.budget = 300;
  const auto ids = select_sentences(pool, seed_corpus, cfg).ranking.ids();
  const auto seed = extract_features(seed_corpus, 3);
  std::vector<double> prev(3, 0.0);
  for (std::size_t n = 0; n <= ids.size(); n += 25) {
    const auto r = coverage(seed, pool, std::span(ids).first(n));
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_GE(r.per_order[k].coverage_ratio, prev[k]);
      prev[k] = r.per_order[k].coverage_ratio;
    }
  }
}

TEST(Coverage, SelectionsBeatRandomSamplesOfEqualSize) {
  std::mt19937_64 rng(4);
  const auto fx = testing::two_domain_mixture(rng, 1000, 50, 150);
  const auto pool = testing::make_corpus(fx.pool);
  const auto seed_corpus = testing::make_corpus(fx.seed);
  const auto seed = extract_features(seed_corpus, 3);
  const std::size_t n = 100;

  double random_mean = 0.0;
  std::vector<SentenceId> all(pool.size());
  std::iota(all.begin(), all.end(), 0);
  for (int draw = 0; draw < 20; ++draw) {
    std::shuffle(all.begin(), all.end(), rng);
    random_mean += coverage(seed, pool, std::span(all).first(n)).per_order[0].coverage_ratio / 20.0;
  }
  for (Algorithm algo : {Algorithm::fda, Algorithm::inr}) {
    SelectorConfig cfg;
    cfg.algorithm = algo;
    cfg.budget = n;
    cfg.inr.threshold = 5;
    const auto ids = select_sentences(pool, seed_corpus, cfg).ranking.ids();
    EXPECT_GT(coverage(seed, pool, ids).per_order[0].coverage_ratio, random_mean)
        << to_string(algo);
  }
}

TEST(CoverageJson, StableKeyOrder) {
  const auto seed = extract_features(testing::make_corpus({"a b"}), 2);
  const auto j = to_json(coverage(seed, testing::make_corpus({"a"}), Count{1}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"selection_size", "token_count", "per_order",
                                            "saturation_threshold", "saturated_types"}));
  std::vector<std::string> order_keys;
  for (const auto& [k, v] : j["per_order"][0].items()) order_keys.push_back(k);
  EXPECT_EQ(order_keys, (std::vector<std::string>{"order", "seed_types", "covered_types",
                                                  "coverage_ratio", "occurrence_histogram"}));
}

TEST(CoverageTable, ListsEveryOrder) {
  const auto seed = extract_features(testing::make_corpus({"a b"}), 2);
  const auto table = render_table(coverage(seed, testing::make_corpus({"a"})));
  EXPECT_NE(table.find("    1           2        1  0.500000"), std::string::npos) << table;
  EXPECT_NE(table.find("    2           1        0  0.000000"), std::string::npos) << table;
}

}  // namespace
}  // namespace tsel

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

// Fixture generators and brute-force oracles shared by the test binaries. The
// oracles operate on plain token vectors and never touch FeatureSet or
// FeatureIndex, so they stay independent of the code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tsel/corpus.hpp"

namespace tsel::testing {

using Tokens = std::vector<std::string>;
using Sentences = std::vector<Tokens>;

inline Sentences random_sentences(std::mt19937_64& rng, std::size_t count, std::size_t vocab,
                                  std::size_t min_len = 1, std::size_t max_len = 8,
                                  const std::string& prefix = "w") {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  // Skewed word distribution so frequent and rare n-grams both occur.
  std::vector<double> weights(vocab);
  for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> word(weights.begin(), weights.end());
  Sentences out(count);
  for (auto& s : out) {
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s.push_back(prefix + std::to_string(word(rng)));
  }
  return out;
}

// A candidate pool drawn half from an in-domain vocabulary and half from an
// unrelated one, plus an in-domain seed. Both domains share a few common words.
struct MixtureFixture {
  Sentences pool;
  Sentences seed;
};

inline MixtureFixture two_domain_mixture(std::mt19937_64& rng, std::size_t pool_size,
                                         std::size_t seed_size, std::size_t vocab = 300) {
  MixtureFixture f;
  auto shared = random_sentences(rng, pool_size + seed_size, 8, 1, 4, "c");
  auto in_domain = random_sentences(rng, pool_size / 2 + seed_size, vocab, 4, 16, "med");
  auto out_domain = random_sentences(rng, pool_size - pool_size / 2, vocab, 4, 16, "news");
  std::size_t next_shared = 0;
  auto mix = [&](Tokens s) {
    for (const auto& w : shared[next_shared++]) s.insert(s.begin() + static_cast<long>(rng() % (s.size() + 1)), w);
    return s;
  };
  for (std::size_t i = 0; i < seed_size; ++i) f.seed.push_back(mix(in_domain[i]));
  for (std::size_t i = seed_size; i < in_domain.size(); ++i) f.pool.push_back(mix(in_domain[i]));
  for (auto& s : out_domain) f.pool.push_back(mix(s));
  std::shuffle(f.pool.begin(), f.pool.end(), rng);
  return f;
}

inline std::string join(const Tokens& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

inline Corpus make_corpus(const Sentences& sentences) {
  std::vector<std::string> lines;
  for (const auto& s : sentences) lines.push_back(join(s));
  return Corpus::from_lines(lines);
}

inline Corpus make_corpus(std::initializer_list<const char*> lines) {
  std::vector<std::string> v(lines.begin(), lines.end());
  return Corpus::from_lines(v);
}

// Every contiguous token subsequence of length 1..max_order.
inline std::set<Tokens> brute_ngrams(const Sentences& text, std::size_t max_order) {
  std::set<Tokens> out;
  for (const auto& s : text) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t k = 1; k <= max_order && i + k <= s.size(); ++k) {
        out.insert(Tokens(s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i + k)));
      }
    }
  }
  return out;
}

inline std::size_t brute_occurrences(const Tokens& sentence, const Tokens& ngram) {
  std::size_t n = 0;
  if (ngram.empty() || ngram.size() > sentence.size()) return 0;
  for (std::size_t i = 0; i + ngram.size() <= sentence.size(); ++i) {
    if (std::equal(ngram.begin(), ngram.end(), sentence.begin() + static_cast<long>(i))) ++n;
  }
  return n;
}

enum class OracleScorer { fda, inr };

struct OracleParams {
  OracleScorer scorer = OracleScorer::fda;
  double decay_base = 0.5;
  bool length_normalize = true;
  std::uint64_t threshold = 1;
};

// Scores a sentence from scratch against map-based counts.
inline double brute_score(const Tokens& sentence, const std::set<Tokens>& seed,
                          const std::map<Tokens, std::uint64_t>& counts,
                          std::size_t max_order, const OracleParams& p) {
  if (sentence.empty()) return 0.0;
  auto count_of = [&](const Tokens& g) {
    auto it = counts.find(g);
    return it == counts.end() ? std::uint64_t{0} : it->second;
  };
  const auto grams = brute_ngrams({sentence}, max_order);
  double sum = 0.0;
  for (const auto& g : grams) {
    if (!seed.count(g)) continue;
    if (p.scorer == OracleScorer::fda) {
      sum += static_cast<double>(brute_occurrences(sentence, g)) *
             std::pow(p.decay_base, static_cast<double>(count_of(g)));
    } else {
      const auto c = count_of(g);
      if (c < p.threshold) sum += static_cast<double>(p.threshold - c);
    }
  }
  if (p.scorer == OracleScorer::fda && p.length_normalize) {
    sum /= static_cast<double>(sentence.size());
  }
  return sum;
}

inline void brute_add_counts(const Tokens& sentence, const std::set<Tokens>& seed,
                             std::size_t max_order, std::map<Tokens, std::uint64_t>& counts) {
  for (const auto& g : brute_ngrams({sentence}, max_order)) {
    if (seed.count(g)) counts[g] += brute_occurrences(sentence, g);
  }
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

struct TracePick {
  std::uint32_t id;
  double score;
};

// Replays a selection trace against from-scratch scores. Each pick must carry
// its brute-force score and be a maximum among the remaining sentences (within
// `rel`, so summation-order rounding cannot flip a tie). Also checks that the
// trace stops exactly when the best remaining score reaches zero or the budget
// is spent. Returns an empty string on success.
inline std::string check_trace(const std::vector<TracePick>& trace, const Sentences& candidates,
                               const Sentences& seed_text, std::size_t max_order,
                               const OracleParams& p, std::size_t budget,
                               const Sentences& init_set = {}, double rel = 1e-12) {
  const auto seed = brute_ngrams(seed_text, max_order);
  std::map<Tokens, std::uint64_t> counts;
  for (const auto& s : init_set) brute_add_counts(s, seed, max_order, counts);
  std::vector<bool> taken(candidates.size(), false);
  for (std::size_t step = 0; step <= trace.size(); ++step) {
    double best = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!taken[i]) best = std::max(best, brute_score(candidates[i], seed, counts, max_order, p));
    }
    if (step == trace.size()) {
      if (trace.size() < budget && best > 0.0) {
        return "trace stopped at " + std::to_string(step) + " with positive score left";
      }
      break;
    }
    const auto& pick = trace[step];
    if (pick.id >= candidates.size() || taken[pick.id]) {
      return "step " + std::to_string(step + 1) + ": invalid or repeated id";
    }
    const double s = brute_score(candidates[pick.id], seed, counts, max_order, p);
    if (!close_rel(s, pick.score, rel)) {
      return "step " + std::to_string(step + 1) + ": score " + std::to_string(pick.score) +
             " but oracle says " + std::to_string(s);
    }
    if (!(s > 0.0) || !close_rel(s, best, rel)) {
      return "step " + std::to_string(step + 1) + ": pick is not a maximum";
    }
    taken[pick.id] = true;
    brute_add_counts(candidates[pick.id], seed, max_order, counts);
  }
  return {};
}

class TempDir {
 public:
  TempDir() {
    static std::uint64_t counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("tsel-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace tsel::testing

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

#include "tsel/metrics.hpp"

#include <bit>
#include <cstdio>

namespace tsel {
namespace {

std::string bucket_label(std::size_t bucket) {
  if (bucket == 0) return "0";
  if (bucket == 1) return "1";
  const std::size_t lo = std::size_t{1} << (bucket - 1);
  return std::to_string(lo) + "-" + std::to_string(2 * lo - 1);
}

std::size_t bucket_of(Count c) {
  return c == 0 ? 0 : static_cast<std::size_t>(std::bit_width(c));
}

}  // namespace

CoverageReport coverage(const FeatureSet& seed, std::span<const TokenizedSentence> selection,
                        std::optional<Count> saturation_threshold) {
  std::vector<Count> occurrences(seed.size(), 0);
  CoverageReport report;
  report.selection_size = selection.size();
  for (const auto& s : selection) {
    report.token_count += s.length();
    seed.for_each_match(s.tokens, [&](FeatureId f) { ++occurrences[f]; });
  }

  report.per_order.resize(seed.max_order());
  std::vector<std::vector<std::size_t>> histograms(seed.max_order());
  for (std::size_t k = 0; k < seed.max_order(); ++k) report.per_order[k].order = k + 1;
  for (FeatureId f = 0; f < seed.size(); ++f) {
    auto& oc = report.per_order[seed.order(f) - 1];
    ++oc.seed_types;
    if (occurrences[f] > 0) ++oc.covered_types;
    auto& hist = histograms[seed.order(f) - 1];
    const std::size_t b = bucket_of(occurrences[f]);
    if (hist.size() <= b) hist.resize(b + 1, 0);
    ++hist[b];
  }
  for (std::size_t k = 0; k < seed.max_order(); ++k) {
    auto& oc = report.per_order[k];
    oc.coverage_ratio = oc.seed_types == 0
                            ? 0.0
                            : static_cast<double>(oc.covered_types) /
                                  static_cast<double>(oc.seed_types);
    for (std::size_t b = 0; b < histograms[k].size(); ++b) {
      oc.occurrence_histogram.emplace_back(bucket_label(b), histograms[k][b]);
    }
  }

  if (saturation_threshold) {
    report.saturation_threshold = saturation_threshold;
    std::size_t saturated = 0;
    for (Count c : occurrences) saturated += c >= *saturation_threshold ? 1 : 0;
    report.saturated_types = saturated;
  }
  return report;
}

CoverageReport coverage(const FeatureSet& seed, const Corpus& selection,
                        std::optional<Count> saturation_threshold) {
  std::vector<TokenizedSentence> sentences;
  sentences.reserve(selection.size());
  for (SentenceId i = 0; i < selection.size(); ++i) sentences.push_back(selection[i]);
  return coverage(seed, sentences, saturation_threshold);
}

CoverageReport coverage(const FeatureSet& seed, const Corpus& corpus,
                        std::span<const SentenceId> ids,
                        std::optional<Count> saturation_threshold) {
  std::vector<TokenizedSentence> sentences;
  sentences.reserve(ids.size());
  for (SentenceId id : ids) sentences.push_back(corpus[id]);
  return coverage(seed, sentences, saturation_threshold);
}

nlohmann::ordered_json to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["selection_size"] = report.selection_size;
  j["token_count"] = report.token_count;
  auto orders = nlohmann::ordered_json::array();
  for (const auto& oc : report.per_order) {
    nlohmann::ordered_json o;
    o["order"] = oc.order;
    o["seed_types"] = oc.seed_types;
    o["covered_types"] = oc.covered_types;
    o["coverage_ratio"] = oc.coverage_ratio;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [label, n] : oc.occurrence_histogram) hist[label] = n;
    o["occurrence_histogram"] = std::move(hist);
    orders.push_back(std::move(o));
  }
  j["per_order"] = std::move(orders);
  if (report.saturation_threshold) {
    j["saturation_threshold"] = *report.saturation_threshold;
    j["saturated_types"] = *report.saturated_types;
  }
  return j;
}

std::string render_table(const CoverageReport& report) {
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "selection: %zu sentences, %zu tokens\n",
                report.selection_size, report.token_count);
  out += buf;
  out += "order  seed_types  covered  coverage\n";
  for (const auto& oc : report.per_order) {
    std::snprintf(buf, sizeof buf, "%5zu  %10zu  %7zu  %8.6f\n", oc.order, oc.seed_types,
                  oc.covered_types, oc.coverage_ratio);
    out += buf;
  }
  if (report.saturation_threshold) {
    std::snprintf(buf, sizeof buf, "saturated types (count >= %llu): %zu\n",
                  static_cast<unsigned long long>(*report.saturation_threshold),
                  *report.saturated_types);
    out += buf;
  }
  return out;
}

}  // namespace tsel

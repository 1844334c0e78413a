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

#include "tsel/translator.hpp"

#include <future>
#include <random>
#include <sstream>

#include "tsel/corpus.hpp"
#include "tsel/errors.hpp"
#include "tsel/process.hpp"

namespace tsel {

TranslatorKind parse_translator_kind(std::string_view name) {
  if (name == "external" || name == "external_process") return TranslatorKind::external_process;
  if (name == "identity") return TranslatorKind::identity;
  if (name == "dictionary") return TranslatorKind::dictionary;
  if (name == "noisy-dictionary" || name == "noisy_dictionary") {
    return TranslatorKind::noisy_dictionary;
  }
  throw ArgumentError("unknown translator kind '" + std::string(name) + "'");
}

std::string_view to_string(TranslatorKind kind) {
  switch (kind) {
    case TranslatorKind::external_process:
      return "external";
    case TranslatorKind::identity:
      return "identity";
    case TranslatorKind::dictionary:
      return "dictionary";
    case TranslatorKind::noisy_dictionary:
      return "noisy-dictionary";
  }
  return "identity";
}

void TranslatorSpec::validate() const {
  switch (kind) {
    case TranslatorKind::external_process:
      if (command.empty()) throw ArgumentError("external translator requires a command");
      if (shards == 0) throw ArgumentError("translator shard count must be >= 1");
      break;
    case TranslatorKind::dictionary:
    case TranslatorKind::noisy_dictionary:
      if (dictionary_path.empty()) {
        throw ArgumentError("dictionary translator requires a dictionary path");
      }
      break;
    case TranslatorKind::identity:
      break;
  }
  for (double p : {noise.copy_through_prob, noise.drop_prob, noise.swap_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("noise probabilities must lie in [0, 1]");
  }
}

std::vector<std::string> Translator::translate(std::span<const std::string> lines,
                                               std::string_view stage) {
  auto out = translate_lines(lines);
  log_.push_back({std::string(stage), lines.size()});
  if (out.size() != lines.size()) {
    throw TranslatorError("translator returned " + std::to_string(out.size()) +
                          " lines for " + std::to_string(lines.size()) + " inputs");
  }
  return out;
}

std::size_t Translator::lines_translated(std::string_view stage) const {
  std::size_t total = 0;
  for (const auto& call : log_) {
    if (call.stage == stage) total += call.lines;
  }
  return total;
}

std::vector<std::string> IdentityTranslator::translate_lines(
    std::span<const std::string> lines) {
  return {lines.begin(), lines.end()};
}

Dictionary Dictionary::load(const std::filesystem::path& path, bool reverse) {
  const std::string text = read_file(path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw DataError(path.string() + ": dictionary line " + std::to_string(line_no) +
                      " must be 'source<TAB>target'");
    }
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return from_pairs(pairs, reverse);
}

Dictionary Dictionary::from_pairs(std::span<const std::pair<std::string, std::string>> pairs,
                                  bool reverse) {
  Dictionary d;
  for (const auto& [src, trg] : pairs) {
    if (reverse) {
      d.table_.try_emplace(trg, src);
    } else {
      d.table_.try_emplace(src, trg);
    }
  }
  return d;
}

std::string_view Dictionary::lookup(std::string_view word) const {
  auto it = table_.find(std::string(word));
  return it == table_.end() ? word : std::string_view(it->second);
}

DictionaryTranslator::DictionaryTranslator(Dictionary dict, NoiseParams noise)
    : dict_(std::move(dict)),
      noise_(noise),
      noisy_(noise.copy_through_prob > 0 || noise.drop_prob > 0 || noise.swap_prob > 0) {}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string_view> split_tokens(const std::string& line) {
  std::vector<std::string_view> out;
  std::string_view v(line);
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < v.size() && v[i] != ' ' && v[i] != '\t') ++i;
    if (i > start) out.push_back(v.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::vector<std::string> DictionaryTranslator::translate_lines(
    std::span<const std::string> lines) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  const auto call = static_cast<std::uint32_t>(call_index());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    // Each line draws from its own stream so results do not depend on batching.
    std::seed_seq seq{static_cast<std::uint32_t>(noise_.rng_seed),
                      static_cast<std::uint32_t>(noise_.rng_seed >> 32), call,
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);

    std::vector<std::string_view> words;
    for (auto tok : split_tokens(lines[i])) {
      if (noisy_ && uniform01(rng) < noise_.drop_prob) continue;
      if (noisy_ && uniform01(rng) < noise_.copy_through_prob) {
        words.push_back(tok);
      } else {
        words.push_back(dict_.lookup(tok));
      }
    }
    if (noisy_ && noise_.swap_prob > 0) {
      for (std::size_t k = 0; k + 1 < words.size(); ++k) {
        if (uniform01(rng) < noise_.swap_prob) {
          std::swap(words[k], words[k + 1]);
          ++k;
        }
      }
    }
    std::string joined;
    for (auto w : words) {
      if (!joined.empty()) joined += ' ';
      joined += w;
    }
    out.push_back(std::move(joined));
  }
  return out;
}

ExternalProcessTranslator::ExternalProcessTranslator(std::string command,
                                                     std::chrono::milliseconds timeout,
                                                     std::size_t shards)
    : command_(std::move(command)), timeout_(timeout), shards_(std::max<std::size_t>(1, shards)) {}

std::vector<std::string> ExternalProcessTranslator::run_shard(
    std::span<const std::string> lines) const {
  std::string input;
  for (const auto& l : lines) {
    input += l;
    input += '\n';
  }
  ProcessResult r = run_process(command_, input, timeout_);
  auto diagnostics = [&] {
    return r.err.empty() ? std::string() : "\n--- translator stderr ---\n" + r.err;
  };
  if (r.timed_out) {
    throw TranslatorError("translator '" + command_ + "' timed out after " +
                          std::to_string(timeout_.count()) + " ms" + diagnostics());
  }
  if (r.exit_code != 0) {
    const std::string why = r.term_signal != 0
                                ? "was killed by signal " + std::to_string(r.term_signal)
                                : "exited with status " + std::to_string(r.exit_code);
    throw TranslatorError("translator '" + command_ + "' " + why + diagnostics());
  }
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin < r.out.size()) {
    std::size_t end = r.out.find('\n', begin);
    if (end == std::string::npos) end = r.out.size();
    std::string line = r.out.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    begin = end + 1;
  }
  if (out.size() != lines.size()) {
    throw TranslatorError("translator '" + command_ + "' produced " +
                          std::to_string(out.size()) + " lines for " +
                          std::to_string(lines.size()) + " inputs" + diagnostics());
  }
  return out;
}

std::vector<std::string> ExternalProcessTranslator::translate_lines(
    std::span<const std::string> lines) {
  if (lines.empty()) return {};
  const std::size_t shards = std::min(shards_, lines.size());
  if (shards == 1) return run_shard(lines);

  std::vector<std::future<std::vector<std::string>>> parts;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = lines.size() * s / shards;
    const std::size_t end = lines.size() * (s + 1) / shards;
    parts.push_back(std::async(std::launch::async, [this, lines, begin, end] {
      return run_shard(lines.subspan(begin, end - begin));
    }));
  }
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (auto& p : parts) {
    auto chunk = p.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  return out;
}

std::unique_ptr<Translator> make_translator(const TranslatorSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case TranslatorKind::identity:
      return std::make_unique<IdentityTranslator>();
    case TranslatorKind::dictionary:
      return std::make_unique<DictionaryTranslator>(
          Dictionary::load(spec.dictionary_path, spec.reverse_dictionary));
    case TranslatorKind::noisy_dictionary:
      return std::make_unique<DictionaryTranslator>(
          Dictionary::load(spec.dictionary_path, spec.reverse_dictionary), spec.noise);
    case TranslatorKind::external_process:
      return std::make_unique<ExternalProcessTranslator>(spec.command, spec.timeout,
                                                         spec.shards);
  }
  throw ArgumentError("unsupported translator kind");
}

}  // namespace tsel

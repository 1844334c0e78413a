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
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsel {

using SentenceId = std::uint32_t;

// A whitespace-tokenized line of a corpus. The token views point into the
// owning Corpus buffer and stay valid for as long as any copy of that Corpus
// is alive.
struct TokenizedSentence {
  SentenceId id = 0;
  std::span<const std::string_view> tokens;

  std::size_t length() const { return tokens.size(); }
  // Empty and whitespace-only lines are kept for alignment but never chosen.
  bool selectable() const { return !tokens.empty(); }
};

// Immutable, cheaply copyable sequence of tokenized sentences. Sentence ids are
// 0-based line numbers of the source text.
class Corpus {
 public:
  Corpus() = default;

  // Parses a whole text buffer, one sentence per LF-terminated line.
  // Throws DataError on malformed UTF-8.
  static Corpus from_text(std::string text);
  static Corpus from_lines(std::span<const std::string> lines);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  std::size_t token_count() const { return tokens_.size(); }

  TokenizedSentence operator[](SentenceId id) const;
  // Tokens joined by single spaces.
  std::string line(SentenceId id) const;
  std::vector<std::string> lines() const;

 private:
  friend struct ParallelCorpus;
  friend class CorpusBuilder;

  std::shared_ptr<const std::string> buffer_;
  std::vector<std::string_view> tokens_;
  std::vector<std::size_t> offsets_;
};

// Two line-aligned corpora.
struct ParallelCorpus {
  Corpus source;
  Corpus target;

  // Buffer holds `source<TAB>target` lines; exactly one TAB per line.
  static ParallelCorpus from_tsv_text(std::string text);
  // Throws DataError if the sides differ in line count.
  static ParallelCorpus from_sides(Corpus source, Corpus target);

  std::size_t size() const { return source.size(); }
};

enum class CorpusFormat { mono, parallel_tsv };

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat format);

std::string read_file(const std::filesystem::path& path);
Corpus load_mono(const std::filesystem::path& path);
ParallelCorpus load_parallel(const std::filesystem::path& path);

// One line per sentence, tokens joined by single spaces.
void write_mono(std::ostream& out, const Corpus& corpus);
void write_mono(std::ostream& out, const Corpus& corpus,
                std::span<const SentenceId> ids);

}  // namespace tsel

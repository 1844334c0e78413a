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

#include "tsel/corpus.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "tsel/errors.hpp"
#include "tsel/utf8.hpp"

namespace tsel {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

// Splits a buffer into lines; a final LF does not start an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return lines;
}

void check_utf8(std::string_view text) {
  if (auto bad = find_invalid_utf8(text)) {
    throw DataError("malformed UTF-8 at byte offset " + std::to_string(*bad));
  }
}

}  // namespace

class CorpusBuilder {
 public:
  explicit CorpusBuilder(std::shared_ptr<const std::string> buffer) {
    corpus_.buffer_ = std::move(buffer);
    corpus_.offsets_.push_back(0);
  }

  void add_line(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > start) corpus_.tokens_.push_back(line.substr(start, i - start));
    }
    corpus_.offsets_.push_back(corpus_.tokens_.size());
  }

  Corpus finish() && { return std::move(corpus_); }

 private:
  Corpus corpus_;
};

Corpus Corpus::from_text(std::string text) {
  check_utf8(text);
  auto buffer = std::make_shared<const std::string>(std::move(text));
  CorpusBuilder builder(buffer);
  for (auto line : split_lines(*buffer)) builder.add_line(line);
  return std::move(builder).finish();
}

Corpus Corpus::from_lines(std::span<const std::string> lines) {
  std::string text;
  for (const auto& l : lines) {
    if (l.find('\n') != std::string::npos) {
      throw DataError("sentence contains an embedded line break");
    }
    text += l;
    text += '\n';
  }
  return from_text(std::move(text));
}

TokenizedSentence Corpus::operator[](SentenceId id) const {
  const std::size_t begin = offsets_[id];
  const std::size_t end = offsets_[id + 1];
  return {id, std::span<const std::string_view>(tokens_).subspan(begin, end - begin)};
}

std::string Corpus::line(SentenceId id) const {
  std::string out;
  for (auto tok : (*this)[id].tokens) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::vector<std::string> Corpus::lines() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (SentenceId i = 0; i < size(); ++i) out.push_back(line(i));
  return out;
}

ParallelCorpus ParallelCorpus::from_tsv_text(std::string text) {
  check_utf8(text);
  auto buffer = std::make_shared<const std::string>(std::move(text));
  CorpusBuilder src(buffer);
  CorpusBuilder trg(buffer);
  std::size_t line_no = 0;
  for (auto line : split_lines(*buffer)) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw DataError("line " + std::to_string(line_no) +
                      ": expected exactly one TAB separating source and target");
    }
    src.add_line(line.substr(0, tab));
    trg.add_line(line.substr(tab + 1));
    ++line_no;
  }
  return {std::move(src).finish(), std::move(trg).finish()};
}

ParallelCorpus ParallelCorpus::from_sides(Corpus source, Corpus target) {
  if (source.size() != target.size()) {
    throw DataError("parallel sides are misaligned: " +
                    std::to_string(source.size()) + " source lines vs " +
                    std::to_string(target.size()) + " target lines");
  }
  return {std::move(source), std::move(target)};
}

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "mono") return CorpusFormat::mono;
  if (name == "parallel-tsv") return CorpusFormat::parallel_tsv;
  throw ArgumentError("unknown corpus format '" + std::string(name) +
                      "' (expected mono or parallel-tsv)");
}

std::string_view to_string(CorpusFormat format) {
  return format == CorpusFormat::mono ? "mono" : "parallel-tsv";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

Corpus load_mono(const std::filesystem::path& path) {
  try {
    return Corpus::from_text(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

ParallelCorpus load_parallel(const std::filesystem::path& path) {
  try {
    return ParallelCorpus::from_tsv_text(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_mono(std::ostream& out, const Corpus& corpus) {
  for (SentenceId i = 0; i < corpus.size(); ++i) out << corpus.line(i) << '\n';
}

void write_mono(std::ostream& out, const Corpus& corpus,
                std::span<const SentenceId> ids) {
  for (SentenceId id : ids) out << corpus.line(id) << '\n';
}

}  // namespace tsel

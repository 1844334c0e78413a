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

#include "tsel/ranking_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "tsel/errors.hpp"

namespace tsel {
namespace {

constexpr std::string_view kHeader = "step\tsentence_id\tscore";

template <class T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw DataError("ranking line " + std::to_string(line_no) + ": bad number '" +
                    std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_ranking_tsv(std::ostream& out, const RankedSelection& ranking) {
  out << kHeader << '\n';
  char buf[64];
  for (const auto& e : ranking.entries) {
    std::snprintf(buf, sizeof buf, "%.6f", e.score);
    out << e.step << '\t' << e.sentence_id << '\t' << buf << '\n';
  }
}

std::string format_ranking_tsv(const RankedSelection& ranking) {
  std::ostringstream ss;
  write_ranking_tsv(ss, ranking);
  return std::move(ss).str();
}

RankedSelection read_ranking_tsv(std::istream& in, SeedKind kind) {
  RankedSelection out;
  out.seed_kind = kind;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw DataError("ranking file must start with header '" + std::string(kHeader) + "'");
  }
  std::unordered_set<SentenceId> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view view(line);
    const auto t1 = view.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : view.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || view.find('\t', t2 + 1) != std::string_view::npos) {
      throw DataError("ranking line " + std::to_string(line_no) + ": expected 3 columns");
    }
    RankedEntry e;
    e.step = parse_number<std::size_t>(view.substr(0, t1), line_no);
    e.sentence_id = parse_number<SentenceId>(view.substr(t1 + 1, t2 - t1 - 1), line_no);
    e.score = parse_number<double>(view.substr(t2 + 1), line_no);
    if (e.step != out.entries.size() + 1) {
      throw DataError("ranking line " + std::to_string(line_no) + ": steps must be consecutive");
    }
    if (!seen.insert(e.sentence_id).second) {
      throw DataError("ranking line " + std::to_string(line_no) + ": duplicate sentence id");
    }
    out.entries.push_back(e);
  }
  return out;
}

RankedSelection load_ranking_tsv(const std::filesystem::path& path, SeedKind kind) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return read_ranking_tsv(in, kind);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace tsel

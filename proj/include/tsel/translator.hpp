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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tsel {

enum class TranslatorKind { external_process, identity, dictionary, noisy_dictionary };

TranslatorKind parse_translator_kind(std::string_view name);
std::string_view to_string(TranslatorKind kind);

// Token-level corruption applied by the noisy dictionary translator, modelling
// typical back-translation errors: untranslated copies, dropped words, and
// local reordering.
struct NoiseParams {
  double copy_through_prob = 0.0;
  double drop_prob = 0.0;
  double swap_prob = 0.0;
  std::uint64_t rng_seed = 0;
};

struct TranslatorSpec {
  TranslatorKind kind = TranslatorKind::identity;
  std::string command;                   // external_process
  std::filesystem::path dictionary_path; // dictionary kinds
  bool reverse_dictionary = false;       // use the dictionary target->source
  NoiseParams noise;                     // noisy_dictionary
  std::chrono::milliseconds timeout{0};  // external_process; 0 = no limit
  std::size_t shards = 1;                // external_process worker count

  // Throws ArgumentError when a kind is missing its required fields.
  void validate() const;
};

struct TranslationCall {
  std::string stage;
  std::size_t lines = 0;
};

// Line-in, line-out translation. Every call is logged with its stage label and
// line count.
class Translator {
 public:
  virtual ~Translator() = default;

  // Throws TranslatorError if the output line count differs from the input.
  std::vector<std::string> translate(std::span<const std::string> lines,
                                     std::string_view stage);

  const std::vector<TranslationCall>& log() const { return log_; }
  std::size_t lines_translated(std::string_view stage) const;

 protected:
  virtual std::vector<std::string> translate_lines(std::span<const std::string> lines) = 0;
  std::size_t call_index() const { return log_.size(); }

 private:
  std::vector<TranslationCall> log_;
};

class IdentityTranslator final : public Translator {
 protected:
  std::vector<std::string> translate_lines(std::span<const std::string> lines) override;
};

// Word-for-word lookup table read from `source<TAB>target` lines. Unknown
// words are copied through.
class Dictionary {
 public:
  static Dictionary load(const std::filesystem::path& path, bool reverse = false);
  static Dictionary from_pairs(std::span<const std::pair<std::string, std::string>> pairs,
                               bool reverse = false);

  std::string_view lookup(std::string_view word) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

class DictionaryTranslator final : public Translator {
 public:
  explicit DictionaryTranslator(Dictionary dict, NoiseParams noise = {});

 protected:
  std::vector<std::string> translate_lines(std::span<const std::string> lines) override;

 private:
  Dictionary dict_;
  NoiseParams noise_;
  bool noisy_;
};

// Speaks the line protocol with an external command: one sentence per line on
// stdin, exactly one translation per line on stdout, order preserved. Input
// can be sharded over several concurrent processes.
class ExternalProcessTranslator final : public Translator {
 public:
  ExternalProcessTranslator(std::string command, std::chrono::milliseconds timeout,
                            std::size_t shards = 1);

 protected:
  std::vector<std::string> translate_lines(std::span<const std::string> lines) override;

 private:
  std::vector<std::string> run_shard(std::span<const std::string> lines) const;

  std::string command_;
  std::chrono::milliseconds timeout_;
  std::size_t shards_;
};

std::unique_ptr<Translator> make_translator(const TranslatorSpec& spec);

}  // namespace tsel

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

#include "tsel/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "tsel/artifacts.hpp"
#include "tsel/combine.hpp"
#include "tsel/corpus.hpp"
#include "tsel/errors.hpp"
#include "tsel/features.hpp"
#include "tsel/metrics.hpp"
#include "tsel/pipeline.hpp"
#include "tsel/ranking_io.hpp"
#include "tsel/selector.hpp"
#include "tsel/translator.hpp"

namespace tsel::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::string_view kVersion = "tsel 1.0.0";
// Rough resident size of the in-memory corpus plus index per input token.
constexpr std::uint64_t kBytesPerToken = 64;

struct CommonOptions {
  std::string seed;
  std::string corpus;
  std::string format = "auto";
  std::string side = "source";
  std::size_t max_order = 3;
  std::string out_dir = "tsel-out";
  std::uint64_t rng_seed = 0;
  std::uint64_t advisory_bytes = 4ull << 30;
  bool quiet = false;
};

struct SelectOptions {
  std::size_t n = 0;
  double decay_base = 0.5;
  bool no_length_norm = false;
  std::string seed_kind = "source";
  Count threshold = 0;
  std::string init_set;
};

struct PipelineOptions {
  std::string mode = "batch";
  std::string algorithm = "fda";
  std::string translator = "identity";
  std::string translator_cmd;
  std::string dictionary;
  std::string back_translator = "identity";
  std::string back_translator_cmd;
  std::string back_dictionary;
  double copy_through_prob = 0.0;
  double drop_prob = 0.0;
  double swap_prob = 0.0;
  double timeout_secs = 0.0;
  std::size_t shards = 1;
};

struct CombineOptions {
  double alpha = 0.5;
  std::size_t n = 0;
  std::string src;
  std::string trg;
  std::string corpus;
  std::string format = "auto";
  std::string side = "source";
  std::string out_dir = "tsel-out";
  bool keep_duplicates = false;
};

struct StatsOptions {
  std::string selection;
  std::string ranking;
  Count saturation = 0;
};

class Reporter {
 public:
  Reporter(std::ostream& err, const bool& quiet) : err_(err), quiet_(quiet) {}
  void operator()(const std::string& msg) const {
    if (!quiet_) err_ << "tsel: " << msg << '\n';
  }
  ProgressFn fn() const {
    return [this](const std::string& m) { (*this)(m); };
  }

 private:
  std::ostream& err_;
  const bool& quiet_;
};

constexpr const char* kConfigHelp = "flat key = value file mirroring flag names; flags win";

void add_common(CLI::App* sub, CommonOptions& o, bool needs_corpus = true) {
  sub->add_option("--config", kConfigHelp)->check(CLI::ExistingFile);
  sub->add_option("--seed", o.seed, "seed text (test set), one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  if (needs_corpus) {
    sub->add_option("--corpus", o.corpus, "candidate corpus")
        ->required()
        ->check(CLI::ExistingFile);
  }
  sub->add_option("--format", o.format, "corpus format: auto, mono or parallel-tsv")
      ->check(CLI::IsMember({"auto", "mono", "parallel-tsv"}))
      ->capture_default_str();
  sub->add_option("--side", o.side, "side of a parallel corpus to select on")
      ->check(CLI::IsMember({"source", "target"}))
      ->capture_default_str();
  sub->add_option("--max-order", o.max_order, "longest n-gram order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out", o.out_dir, "output directory")
      ->envname("TSEL_OUTPUT_DIR")
      ->capture_default_str();
  sub->add_option("--rng-seed", o.rng_seed, "random seed")->capture_default_str();
  sub->add_option("--advisory-bytes", o.advisory_bytes,
                  "print a memory note when inputs exceed this size")
      ->capture_default_str();
  sub->add_flag("--quiet", o.quiet, "suppress progress messages");
}

void add_budget(CLI::App* sub, SelectOptions& s) {
  sub->add_option("--n", s.n,
                  "number of sentences to select (reference sizes: 100000, 200000, 500000)")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_fda(CLI::App* sub, SelectOptions& s) {
  sub->add_option("--decay-base", s.decay_base,
                  "per-occurrence decay factor of an already selected n-gram, in (0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sub->add_flag("--no-length-norm", s.no_length_norm,
                "do not divide the score by sentence length");
}

void add_inr(CLI::App* sub, SelectOptions& s, bool required) {
  auto* opt = sub->add_option(
      "--threshold", s.threshold,
      "frequency threshold t; n-grams seen t times stop contributing "
      "(reference settings: 80 for a news test set, 640 for a biomedical one)");
  opt->check(CLI::PositiveNumber);
  if (required) opt->required();
  sub->add_option("--init-set", s.init_set,
                  "in-domain corpus whose n-gram counts initialize INR")
      ->check(CLI::ExistingFile);
}

CorpusFormat resolve_format(const std::string& format, const std::string& path) {
  if (format == "auto") {
    return fs::path(path).extension() == ".tsv" ? CorpusFormat::parallel_tsv
                                                : CorpusFormat::mono;
  }
  return parse_corpus_format(format);
}

void advise_memory(const std::vector<std::string>& paths, std::uint64_t advisory_bytes,
                   const Reporter& report) {
  std::uint64_t total = 0;
  for (const auto& p : paths) {
    std::error_code ec;
    if (!p.empty()) total += fs::file_size(p, ec);
  }
  if (total > advisory_bytes) {
    report("note: inputs total " + std::to_string(total) +
           " bytes and are held in memory; budget roughly " + std::to_string(kBytesPerToken) +
           " bytes per token for corpus and index");
  }
}

struct Candidates {
  CorpusFormat format = CorpusFormat::mono;
  ParallelCorpus parallel;  // when format == parallel_tsv
  Corpus side;              // the corpus selection runs over
  bool target_side = false;
};

Candidates load_candidates(const std::string& path, const std::string& format,
                           const std::string& side) {
  Candidates c;
  c.format = resolve_format(format, path);
  if (c.format == CorpusFormat::parallel_tsv) {
    c.parallel = load_parallel(path);
    c.target_side = side == "target";
    c.side = c.target_side ? c.parallel.target : c.parallel.source;
  } else {
    c.side = load_mono(path);
  }
  return c;
}

std::string join_lines(const Corpus& corpus, std::span<const SentenceId> ids) {
  std::ostringstream ss;
  write_mono(ss, corpus, ids);
  return std::move(ss).str();
}

// Writes ranking.tsv, selected.txt and, for parallel input, selected.tsv.
void write_selection(ArtifactWriter& writer, const RankedSelection& ranking,
                     const Candidates& c) {
  const auto ids = ranking.ids();
  writer.write("ranking.tsv", format_ranking_tsv(ranking));
  writer.write("selected.txt", join_lines(c.side, ids));
  if (c.format == CorpusFormat::parallel_tsv) {
    std::string pairs;
    for (SentenceId id : ids) {
      pairs += c.parallel.source.line(id);
      pairs += '\t';
      pairs += c.parallel.target.line(id);
      pairs += '\n';
    }
    writer.write("selected.tsv", pairs);
  }
}

Json digests(const std::vector<std::pair<std::string, std::string>>& inputs) {
  Json j = Json::object();
  for (const auto& [role, path] : inputs) {
    if (path.empty()) continue;
    Json entry;
    entry["path"] = path;
    entry["sha256"] = sha256_file(path);
    j[role] = std::move(entry);
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json timings_json(const std::vector<StageTiming>& timings) {
  Json j = Json::array();
  for (const auto& t : timings) {
    Json e;
    e["stage"] = t.stage;
    e["seconds"] = t.seconds;
    j.push_back(std::move(e));
  }
  return j;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// --- subcommands -----------------------------------------------------------

void cmd_index(const CommonOptions& o, std::ostream& out, const Reporter& report) {
  advise_memory({o.seed, o.corpus}, o.advisory_bytes, report);
  const Corpus seed = load_mono(o.seed);
  const Candidates c = load_candidates(o.corpus, o.format, o.side);
  FeatureSet features = extract_features(seed, o.max_order);
  const FeatureIndex index = build_index(c.side, std::move(features));

  std::vector<std::size_t> per_order(o.max_order, 0);
  for (FeatureId f = 0; f < index.seed().size(); ++f) ++per_order[index.seed().order(f) - 1];

  Json j;
  j["max_order"] = o.max_order;
  j["seed_sentences"] = seed.size();
  j["seed_features"] = index.seed().size();
  Json orders = Json::object();
  for (std::size_t k = 0; k < per_order.size(); ++k) orders[std::to_string(k + 1)] = per_order[k];
  j["seed_features_per_order"] = std::move(orders);
  j["candidates"] = c.side.size();
  j["candidate_tokens"] = c.side.token_count();
  j["indexed_candidates"] = index.indexed_sentence_count();
  j["postings"] = index.posting_count();
  j["inputs"] = digests({{"seed", o.seed}, {"corpus", o.corpus}});

  ArtifactWriter writer(o.out_dir);
  writer.write("index.json", dump(j));
  writer.commit();
  out << "seed n-gram types: " << index.seed().size() << "\nindexed candidates: "
      << index.indexed_sentence_count() << " of " << c.side.size() << "\n";
}

void cmd_select(Algorithm algorithm, const CommonOptions& o, const SelectOptions& s,
                const Reporter& report) {
  advise_memory({o.seed, o.corpus, s.init_set}, o.advisory_bytes, report);
  SelectorConfig cfg;
  cfg.algorithm = algorithm;
  cfg.budget = s.n;
  cfg.max_order = o.max_order;
  cfg.fda.decay_base = s.decay_base;
  cfg.fda.length_normalize = !s.no_length_norm;
  cfg.inr.threshold = s.threshold;
  if (!s.init_set.empty()) cfg.inr.init_set_path = s.init_set;
  cfg.seed_kind = parse_seed_kind(s.seed_kind);
  cfg.progress = report.fn();
  cfg.validate();

  Stopwatch load_clock;
  const Corpus seed = load_mono(o.seed);
  const Candidates c = load_candidates(o.corpus, o.format, o.side);
  std::optional<Corpus> init_set;
  if (!s.init_set.empty()) init_set = load_mono(s.init_set);
  std::vector<StageTiming> timings{{"load", load_clock.seconds()}};
  report("loaded " + std::to_string(c.side.size()) + " candidate sentences");

  ArtifactWriter writer(o.out_dir);
  Stopwatch select_clock;
  const SelectorOutput result =
      select_sentences(c.side, seed, cfg, init_set ? &*init_set : nullptr);
  timings.push_back({"selection", select_clock.seconds()});

  write_selection(writer, result.ranking, c);

  Json manifest;
  manifest["tool"] = kVersion;
  manifest["command"] = algorithm == Algorithm::fda ? "select-fda" : "select-inr";
  Json conf;
  conf["algorithm"] = to_string(algorithm);
  conf["n"] = s.n;
  conf["max_order"] = o.max_order;
  conf["format"] = to_string(c.format);
  conf["side"] = o.side;
  conf["seed_kind"] = to_string(cfg.seed_kind);
  if (algorithm == Algorithm::fda) {
    conf["decay_base"] = s.decay_base;
    conf["length_normalize"] = !s.no_length_norm;
  } else {
    conf["threshold"] = s.threshold;
  }
  conf["rng_seed"] = o.rng_seed;
  manifest["config"] = std::move(conf);
  manifest["inputs"] = digests({{"seed", o.seed}, {"corpus", o.corpus}, {"init_set", s.init_set}});
  manifest["seed_features"] = result.seed_features;
  manifest["indexed_candidates"] = result.indexed_sentences;
  manifest["selection_size"] = result.ranking.size();
  writer.write("manifest.json", dump(manifest));
  writer.write("timings.json", dump(timings_json(timings)));
  writer.commit();
  report("wrote " + std::to_string(result.ranking.size()) + " sentences to " + o.out_dir);
}

void cmd_combine(const CombineOptions& o, const Reporter& report) {
  CombineSpec spec;
  spec.alpha = o.alpha;
  spec.total_n = o.n;
  spec.dedup = !o.keep_duplicates;
  spec.validate();
  const RankedSelection src = load_ranking_tsv(o.src, SeedKind::source);
  const RankedSelection trg = load_ranking_tsv(o.trg, SeedKind::approx_target);
  const RankedSelection combined = combine_rankings(src, trg, spec);

  ArtifactWriter writer(o.out_dir);
  if (!o.corpus.empty()) {
    const Candidates c = load_candidates(o.corpus, o.format, o.side);
    for (const auto& e : combined.entries) {
      if (e.sentence_id >= c.side.size()) {
        throw DataError("ranking refers to sentence " + std::to_string(e.sentence_id) +
                        " beyond the corpus");
      }
    }
    write_selection(writer, combined, c);
  } else {
    writer.write("ranking.tsv", format_ranking_tsv(combined));
  }
  writer.commit();
  report("combined " + std::to_string(combined.size()) + " sentences (" +
         std::to_string(spec.source_share()) + " requested from the source-seed ranking)");
}

TranslatorSpec make_spec(const std::string& kind, const std::string& cmd,
                         const std::string& dictionary, bool reverse,
                         const PipelineOptions& p, std::uint64_t rng_seed) {
  TranslatorSpec spec;
  spec.kind = parse_translator_kind(kind);
  spec.command = cmd;
  spec.dictionary_path = dictionary;
  spec.reverse_dictionary = reverse;
  spec.noise = {p.copy_through_prob, p.drop_prob, p.swap_prob, rng_seed};
  spec.timeout = std::chrono::milliseconds(static_cast<long long>(p.timeout_secs * 1000.0));
  spec.shards = p.shards;
  spec.validate();
  return spec;
}

void cmd_pipeline(const CommonOptions& o, const SelectOptions& s, const PipelineOptions& p,
                  const Reporter& report) {
  advise_memory({o.seed, o.corpus, s.init_set}, o.advisory_bytes, report);
  PipelineConfig cfg;
  cfg.mode = parse_pipeline_mode(p.mode);
  cfg.selector.algorithm = parse_algorithm(p.algorithm);
  cfg.selector.budget = s.n;
  cfg.selector.max_order = o.max_order;
  cfg.selector.fda.decay_base = s.decay_base;
  cfg.selector.fda.length_normalize = !s.no_length_norm;
  cfg.selector.inr.threshold = s.threshold;
  cfg.selector.progress = report.fn();
  cfg.selector.validate();

  const TranslatorSpec forward_spec =
      make_spec(p.translator, p.translator_cmd, p.dictionary, false, p, o.rng_seed);
  // Without a dedicated back dictionary the forward one is used in reverse.
  const bool reuse = p.back_dictionary.empty();
  const TranslatorSpec back_spec =
      make_spec(p.back_translator, p.back_translator_cmd,
                reuse ? p.dictionary : p.back_dictionary, reuse, p, o.rng_seed);

  const Corpus test_set = load_mono(o.seed);
  std::optional<Corpus> init_set;
  if (!s.init_set.empty()) init_set = load_mono(s.init_set);
  const Corpus* init = init_set ? &*init_set : nullptr;
  const CorpusFormat format = resolve_format(o.format, o.corpus);

  auto forward = make_translator(forward_spec);
  auto back = make_translator(back_spec);
  ArtifactWriter writer(o.out_dir);

  PipelineResult result;
  try {
    if (cfg.mode == PipelineMode::batch) {
      if (format == CorpusFormat::parallel_tsv) {
        result = run_batch(cfg, load_parallel(o.corpus), test_set, init);
      } else {
        report("back-translating the full corpus before selection");
        result = run_batch(cfg, load_mono(o.corpus), test_set, *back, init);
      }
    } else {
      if (format != CorpusFormat::mono) {
        throw ArgumentError("online mode selects from a monolingual target-side corpus");
      }
      result = run_online(cfg, load_mono(o.corpus), test_set, *forward, *back, init);
    }
  } catch (const TranslatorError& e) {
    std::string log;
    for (const auto* t : {forward.get(), back.get()}) {
      for (const auto& call : t->log()) log += call.stage + "\t" + std::to_string(call.lines) + "\n";
    }
    writer.write("translator.log", log);
    throw;
  }

  std::string src_text, trg_text;
  for (const auto& pair : result.pairs) {
    src_text += pair.source + "\n";
    trg_text += pair.target + "\n";
  }
  std::string seed_text;
  for (const auto& l : result.seed) seed_text += l + "\n";
  std::string log;
  for (const auto* t : {forward.get(), back.get()}) {
    for (const auto& call : t->log()) log += call.stage + "\t" + std::to_string(call.lines) + "\n";
  }

  writer.write("ranking.tsv", format_ranking_tsv(result.ranking));
  writer.write("selected.src", src_text);
  writer.write("selected.trg", trg_text);
  writer.write("seed.txt", seed_text);
  writer.write("translator.log", log);

  Json manifest;
  manifest["tool"] = kVersion;
  manifest["command"] = "pipeline";
  Json conf;
  conf["mode"] = to_string(cfg.mode);
  conf["algorithm"] = to_string(cfg.selector.algorithm);
  conf["n"] = s.n;
  conf["max_order"] = o.max_order;
  conf["format"] = to_string(format);
  if (cfg.selector.algorithm == Algorithm::fda) {
    conf["decay_base"] = s.decay_base;
    conf["length_normalize"] = !s.no_length_norm;
  } else {
    conf["threshold"] = s.threshold;
  }
  auto translator_json = [](const TranslatorSpec& t) {
    Json j;
    j["kind"] = to_string(t.kind);
    if (!t.command.empty()) j["command"] = t.command;
    if (!t.dictionary_path.empty()) {
      j["dictionary"] = t.dictionary_path.string();
      j["reverse"] = t.reverse_dictionary;
    }
    if (t.kind == TranslatorKind::noisy_dictionary) {
      j["copy_through_prob"] = t.noise.copy_through_prob;
      j["drop_prob"] = t.noise.drop_prob;
      j["swap_prob"] = t.noise.swap_prob;
    }
    return j;
  };
  conf["translator"] = translator_json(forward_spec);
  conf["back_translator"] = translator_json(back_spec);
  conf["rng_seed"] = o.rng_seed;
  manifest["config"] = std::move(conf);
  manifest["inputs"] = digests({{"seed", o.seed}, {"corpus", o.corpus}, {"init_set", s.init_set}});
  manifest["seed_features"] = result.seed_features;
  manifest["selection_size"] = result.ranking.size();
  manifest["back_translated_lines"] = back->lines_translated(kBackTranslationStage);
  Json stages = Json::array();
  for (const auto& t : result.timings) stages.push_back(t.stage);
  manifest["stages"] = std::move(stages);
  writer.write("manifest.json", dump(manifest));
  writer.write("timings.json", dump(timings_json(result.timings)));
  writer.commit();
  report(std::string(to_string(cfg.mode)) + " pipeline selected " +
         std::to_string(result.ranking.size()) + " pairs; back-translated " +
         std::to_string(back->lines_translated(kBackTranslationStage)) + " lines");
}

void cmd_stats(const CommonOptions& o, const StatsOptions& st, std::ostream& out) {
  const Corpus seed = load_mono(o.seed);
  const FeatureSet features = extract_features(seed, o.max_order);
  std::optional<Count> saturation;
  if (st.saturation > 0) saturation = st.saturation;

  CoverageReport report;
  if (!st.ranking.empty()) {
    if (o.corpus.empty()) throw ArgumentError("--ranking requires --corpus");
    const Candidates c = load_candidates(o.corpus, o.format, o.side);
    const auto ids = load_ranking_tsv(st.ranking).ids();
    for (SentenceId id : ids) {
      if (id >= c.side.size()) {
        throw DataError("ranking refers to sentence " + std::to_string(id) + " beyond the corpus");
      }
    }
    report = coverage(features, c.side, ids, saturation);
  } else if (!st.selection.empty()) {
    const Candidates c = load_candidates(st.selection, o.format, o.side);
    report = coverage(features, c.side, saturation);
  } else {
    throw ArgumentError("stats needs --selection, or --ranking with --corpus");
  }

  out << render_table(report);
  ArtifactWriter writer(o.out_dir);
  writer.write("coverage.json", dump(to_json(report)));
  writer.commit();
}

// Expands `--config FILE` into ordinary flags placed before the user's own
// arguments. Keys also given on the command line are skipped, so flags win.
std::vector<std::string> expand_config(CLI::App& app, std::vector<std::string> args) {
  if (args.size() < 2) return args;
  CLI::App* sub = app.get_subcommand_no_throw(args[1]);
  if (sub == nullptr) return args;

  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return args;

  std::set<std::string> given;
  for (const auto& a : rest) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  }

  std::ifstream in(config_path);
  if (!in) throw ArgumentError("cannot read config file " + config_path);
  std::vector<std::string> expanded{args[0], args[1]};
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string v) {
    const auto b = v.find_first_not_of(" \t\r");
    const auto e = v.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError(config_path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config") continue;
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw ArgumentError(config_path + ":" + std::to_string(line_no) + ": unknown key '" +
                          key + "'");
    }
    if (given.count(key)) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes" || value == "on") {
        expanded.push_back("--" + key);
      }
    } else {
      expanded.push_back("--" + key);
      expanded.push_back(value);
    }
  }
  expanded.insert(expanded.end(), rest.begin(), rest.end());
  return expanded;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transductive corpus selection: FDA and INR rankings, seed mixing and "
               "back-translation pipelines"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  SelectOptions sel;
  PipelineOptions pipe;
  CombineOptions comb;
  StatsOptions stats;
  Reporter report(err, common.quiet);

  auto* index = app.add_subcommand("index", "extract seed n-grams and index a candidate corpus");
  add_common(index, common);

  auto* fda = app.add_subcommand("select-fda", "rank candidates with feature decay");
  add_common(fda, common);
  add_budget(fda, sel);
  add_fda(fda, sel);
  fda->add_option("--seed-kind", sel.seed_kind, "source or approx-target")
      ->check(CLI::IsMember({"source", "approx-target"}))
      ->capture_default_str();

  auto* inr = app.add_subcommand("select-inr", "rank candidates with infrequent n-gram recovery");
  add_common(inr, common);
  add_budget(inr, sel);
  add_inr(inr, sel, true);
  inr->add_option("--seed-kind", sel.seed_kind, "source or approx-target")
      ->check(CLI::IsMember({"source", "approx-target"}))
      ->capture_default_str();

  auto* combine = app.add_subcommand(
      "combine", "mix a source-seed and a target-seed ranking in proportion alpha");
  combine->add_option("--config", kConfigHelp)->check(CLI::ExistingFile);
  combine->add_option("--alpha", comb.alpha,
                      "share taken from --src (reference grid: 1, 0.75, 0.5, 0.25, 0)")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  combine->add_option("--n", comb.n, "combined size")->required()->check(CLI::PositiveNumber);
  combine->add_option("--src", comb.src, "ranking.tsv from the source-language seed")
      ->required()
      ->check(CLI::ExistingFile);
  combine->add_option("--trg", comb.trg, "ranking.tsv from the approximated target seed")
      ->required()
      ->check(CLI::ExistingFile);
  combine->add_flag("--keep-duplicates", comb.keep_duplicates,
                    "plain concatenation; no deduplication or backfill");
  combine->add_option("--corpus", comb.corpus, "corpus to extract the combined sentences from")
      ->check(CLI::ExistingFile);
  combine->add_option("--format", comb.format, "corpus format: auto, mono or parallel-tsv")
      ->check(CLI::IsMember({"auto", "mono", "parallel-tsv"}))
      ->capture_default_str();
  combine->add_option("--side", comb.side, "side of a parallel corpus to write")
      ->check(CLI::IsMember({"source", "target"}))
      ->capture_default_str();
  combine->add_option("--out", comb.out_dir, "output directory")
      ->envname("TSEL_OUTPUT_DIR")
      ->capture_default_str();
  combine->add_flag("--quiet", common.quiet, "suppress progress messages");

  auto* pipeline = app.add_subcommand("pipeline", "batch or online back-translation selection");
  add_common(pipeline, common);
  add_budget(pipeline, sel);
  add_fda(pipeline, sel);
  add_inr(pipeline, sel, false);
  pipeline->add_option("--mode", pipe.mode,
                       "batch: back-translate everything, then select; "
                       "online: select target-side text, then back-translate it")
      ->check(CLI::IsMember({"batch", "online"}))
      ->capture_default_str();
  pipeline->add_option("--algorithm", pipe.algorithm, "fda or inr")
      ->check(CLI::IsMember({"fda", "inr"}))
      ->capture_default_str();
  const std::vector<std::string> kinds{"identity", "dictionary", "noisy-dictionary", "external"};
  pipeline->add_option("--translator", pipe.translator,
                       "source-to-target translator producing the online seed")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  pipeline->add_option("--translator-cmd", pipe.translator_cmd,
                       "command for an external translator (line in, line out)");
  pipeline->add_option("--dictionary", pipe.dictionary, "source<TAB>target word list")
      ->check(CLI::ExistingFile);
  pipeline->add_option("--back-translator", pipe.back_translator,
                       "target-to-source translator for back-translation")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  pipeline->add_option("--back-translator-cmd", pipe.back_translator_cmd,
                       "command for an external back-translator");
  pipeline->add_option("--back-dictionary", pipe.back_dictionary,
                       "target<TAB>source word list (default: --dictionary reversed)")
      ->check(CLI::ExistingFile);
  pipeline->add_option("--copy-through-prob", pipe.copy_through_prob,
                       "noisy-dictionary: probability a word is left untranslated")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  pipeline->add_option("--drop-prob", pipe.drop_prob, "noisy-dictionary: word drop probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  pipeline->add_option("--swap-prob", pipe.swap_prob,
                       "noisy-dictionary: adjacent swap probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  pipeline->add_option("--translator-timeout-secs", pipe.timeout_secs,
                       "kill an external translator after this long (0 = no limit)")
      ->envname("TSEL_TRANSLATOR_TIMEOUT_SECS")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  pipeline->add_option("--translator-shards", pipe.shards,
                       "concurrent external translator processes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* stat = app.add_subcommand("stats", "seed n-gram coverage of a selection");
  add_common(stat, common, false);
  stat->add_option("--corpus", common.corpus, "corpus the ranking refers to")
      ->check(CLI::ExistingFile);
  stat->add_option("--selection", stats.selection, "selected sentences, one per line")
      ->check(CLI::ExistingFile);
  stat->add_option("--ranking", stats.ranking, "ranking.tsv over --corpus")
      ->check(CLI::ExistingFile);
  stat->add_option("--saturation", stats.saturation,
                   "also count seed n-grams occurring at least this often");

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(app, std::move(args));
  } catch (const ArgumentError& e) {
    err << "tsel: error: " << e.what() << '\n';
    return kUsageError;
  }
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*index) {
      cmd_index(common, out, report);
    } else if (*fda) {
      cmd_select(Algorithm::fda, common, sel, report);
    } else if (*inr) {
      cmd_select(Algorithm::inr, common, sel, report);
    } else if (*combine) {
      cmd_combine(comb, report);
    } else if (*pipeline) {
      if (pipe.algorithm == "inr" && sel.threshold == 0) {
        throw ArgumentError("--threshold is required with --algorithm inr");
      }
      cmd_pipeline(common, sel, pipe, report);
    } else if (*stat) {
      cmd_stats(common, stats, out);
    }
  } catch (const ArgumentError& e) {
    err << "tsel: error: " << e.what() << '\n';
    return kUsageError;
  } catch (const TranslatorError& e) {
    err << "tsel: translator failure: " << e.what() << '\n';
    return kTranslatorError;
  } catch (const std::exception& e) {
    err << "tsel: error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace tsel::cli

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

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"
#include "tsel/cli.hpp"

namespace tsel {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run tsel(std::vector<std::string> args) {
  args.insert(args.begin(), "tsel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ranking_tsv(std::vector<int> ids) {
  std::string s = "step\tsentence_id\tscore\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    s += std::to_string(i + 1) + "\t" + std::to_string(ids[i]) + "\t1.000000\n";
  }
  return s;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    seed_ = dir_.write("seed.txt", "a b\n");
    corpus_ = dir_.write("corpus.txt", "a b\na b c\nx y\n\n");
  }
  std::string out(const std::string& name) const { return (dir_ / name).string(); }

  testing::TempDir dir_;
  fs::path seed_, corpus_;
};

TEST_F(CliTest, SelectFdaWritesRankingAndSelection) {
  const auto r = tsel({"select-fda", "--seed", seed_, "--corpus", corpus_, "--n", "5",
                       "--out", out("o"), "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testing::slurp(dir_ / "o" / "ranking.tsv"),
            "step\tsentence_id\tscore\n1\t0\t1.500000\n2\t1\t0.500000\n");
  EXPECT_EQ(testing::slurp(dir_ / "o" / "selected.txt"), "a b\na b c\n");
  const auto manifest = nlohmann::json::parse(testing::slurp(dir_ / "o" / "manifest.json"));
  EXPECT_EQ(manifest["selection_size"], 2);
  EXPECT_EQ(manifest["config"]["decay_base"], 0.5);
  EXPECT_EQ(manifest["inputs"]["seed"]["sha256"].get<std::string>().size(), 64u);
  EXPECT_TRUE(fs::exists(dir_ / "o" / "timings.json"));
  EXPECT_FALSE(fs::exists(dir_ / "o" / "ranking.tsv.partial"));
}

TEST_F(CliTest, SelectInrAcceptsReferenceThreshold) {
  const auto r = tsel({"select-inr", "--seed", seed_, "--corpus", corpus_, "--n", "100000",
                       "--threshold", "640", "--out", out("o"), "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto manifest = nlohmann::json::parse(testing::slurp(dir_ / "o" / "manifest.json"));
  EXPECT_EQ(manifest["config"]["threshold"], 640);
  EXPECT_EQ(manifest["selection_size"], 2);
}

TEST_F(CliTest, ParallelInputWritesPairs) {
  const auto tsv = dir_.write("pairs.tsv", "a b\tA B\nq\tQ\n");
  const auto r = tsel({"select-fda", "--seed", seed_, "--corpus", tsv, "--n", "3",
                       "--out", out("o"), "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testing::slurp(dir_ / "o" / "selected.tsv"), "a b\tA B\n");
  const auto t = tsel({"select-fda", "--seed", dir_.write("s2.txt", "B\n"), "--corpus", tsv,
                       "--side", "target", "--n", "3", "--out", out("t"), "--quiet"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(testing::slurp(dir_ / "t" / "selected.txt"), "A B\n");
}

TEST_F(CliTest, IndexSummarizesSeedAndCandidates) {
  const auto r = tsel({"index", "--seed", seed_, "--corpus", corpus_, "--out", out("i")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("seed n-gram types: 3"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(testing::slurp(dir_ / "i" / "index.json"));
  EXPECT_EQ(j["indexed_candidates"], 2);
  EXPECT_EQ(j["candidates"], 4);
}

TEST_F(CliTest, CombineSplitsDisjointRankingsEvenly) {
  const auto a = dir_.write("a.tsv", ranking_tsv({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  const auto b = dir_.write("b.tsv", ranking_tsv({10, 11, 12, 13, 14, 15, 16, 17, 18, 19}));
  const auto r = tsel({"combine", "--alpha", "0.5", "--n", "10", "--src", a, "--trg", b,
                       "--out", out("c"), "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(testing::slurp(dir_ / "c" / "ranking.tsv"));
  std::string line;
  std::getline(in, line);
  std::vector<int> ids;
  while (std::getline(in, line)) ids.push_back(std::stoi(line.substr(line.find('\t') + 1)));
  EXPECT_EQ(ids, (std::vector<int>{0, 1, 2, 3, 4, 10, 11, 12, 13, 14}));
}

TEST_F(CliTest, CombineKeepDuplicates) {
  const auto a = dir_.write("a.tsv", ranking_tsv({7, 9, 42}));
  const auto b = dir_.write("b.tsv", ranking_tsv({9, 3}));
  ASSERT_EQ(tsel({"combine", "--alpha", "0.5", "--n", "4", "--src", a, "--trg", b, "--out",
                  out("d"), "--quiet"}).code, 0);
  ASSERT_EQ(tsel({"combine", "--alpha", "0.5", "--n", "4", "--src", a, "--trg", b,
                  "--keep-duplicates", "--out", out("k"), "--quiet"}).code, 0);
  EXPECT_NE(testing::slurp(dir_ / "d" / "ranking.tsv").find("4\t42\t"), std::string::npos);
  EXPECT_NE(testing::slurp(dir_ / "k" / "ranking.tsv").find("3\t9\t"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(tsel({}).code, 1);
  EXPECT_EQ(tsel({"select-fda", "--seed", seed_, "--corpus", corpus_}).code, 1);  // no --n
  EXPECT_EQ(tsel({"select-fda", "--seed", seed_, "--corpus", corpus_, "--n", "0"}).code, 1);
  EXPECT_EQ(tsel({"select-inr", "--seed", seed_, "--corpus", corpus_, "--n", "3"}).code, 1);
  EXPECT_EQ(tsel({"select-fda", "--seed", seed_, "--corpus", corpus_, "--n", "3",
                  "--decay-base", "1.5"}).code, 1);
  EXPECT_EQ(tsel({"select-fda", "--seed", (dir_ / "nope.txt").string(), "--corpus", corpus_,
                  "--n", "3"}).code, 1);
  EXPECT_EQ(tsel({"pipeline", "--seed", seed_, "--corpus", corpus_, "--n", "3",
                  "--algorithm", "inr", "--out", out("p")}).code, 1);
  EXPECT_EQ(tsel({"pipeline", "--seed", seed_, "--corpus", corpus_, "--n", "3",
                  "--translator", "dictionary", "--out", out("p")}).code, 1);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  const auto bad_utf8 = dir_.write("bad.txt", "ok\n\xff\xfe\n");
  const auto r = tsel({"select-fda", "--seed", seed_, "--corpus", bad_utf8, "--n", "3",
                       "--out", out("o")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte offset 3"), std::string::npos) << r.err;
  const auto bad_tsv = dir_.write("bad.tsv", "a\tb\tc\n");
  EXPECT_EQ(tsel({"select-fda", "--seed", seed_, "--corpus", bad_tsv, "--n", "3",
                  "--out", out("o")}).code, 2);
  const auto bad_rank = dir_.write("r.tsv", "step\tsentence_id\tscore\n1\t0\t1\n1\t2\t1\n");
  EXPECT_EQ(tsel({"combine", "--alpha", "0.5", "--n", "3", "--src", bad_rank, "--trg",
                  bad_rank, "--out", out("c")}).code, 2);
}

TEST_F(CliTest, TranslatorFailureExitsThreeAndLeavesPartialLog) {
  const auto r = tsel({"pipeline", "--mode", "online", "--seed", seed_, "--corpus", corpus_,
                       "--n", "3", "--translator", "external", "--translator-cmd", "exit 7",
                       "--out", out("p"), "--quiet"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("status 7"), std::string::npos) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "p" / "translator.log.partial"));
  EXPECT_FALSE(fs::exists(dir_ / "p" / "manifest.json"));
  EXPECT_FALSE(fs::exists(dir_ / "p" / "ranking.tsv"));
}

TEST_F(CliTest, TranslatorTimeoutFromEnvironment) {
  ::setenv("TSEL_TRANSLATOR_TIMEOUT_SECS", "0.3", 1);
  const auto r = tsel({"pipeline", "--mode", "online", "--seed", seed_, "--corpus", corpus_,
                       "--n", "3", "--translator", "external", "--translator-cmd", "sleep 20",
                       "--out", out("p"), "--quiet"});
  ::unsetenv("TSEL_TRANSLATOR_TIMEOUT_SECS");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("timed out"), std::string::npos) << r.err;
}

TEST_F(CliTest, OnlinePipelineArtifacts) {
  const auto dict = dir_.write("dict.tsv", "a\tA\nb\tB\nc\tC\n");
  const auto mono = dir_.write("mono.txt", "A B\nA B C\nX Y\n");
  const auto r = tsel({"pipeline", "--mode", "online", "--seed", seed_, "--corpus", mono,
                       "--n", "5", "--translator", "dictionary", "--dictionary", dict,
                       "--back-translator", "dictionary", "--out", out("p"), "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(testing::slurp(dir_ / "p" / "seed.txt"), "A B\n");
  EXPECT_EQ(testing::slurp(dir_ / "p" / "selected.trg"), "A B\nA B C\n");
  EXPECT_EQ(testing::slurp(dir_ / "p" / "selected.src"), "a b\na b c\n");
  EXPECT_EQ(testing::slurp(dir_ / "p" / "translator.log"), "seed_translation\t1\nback_translation\t2\n");
  const auto m = nlohmann::json::parse(testing::slurp(dir_ / "p" / "manifest.json"));
  EXPECT_EQ(m["back_translated_lines"], 2);
  EXPECT_EQ(m["stages"], (nlohmann::json{"seed_translation", "selection", "back_translation"}));
}

TEST_F(CliTest, ConfigFileValuesYieldToFlags) {
  const auto cfg = dir_.write("run.cfg", "# defaults\nn = 1\nquiet = true\ndecay-base = 0.25\n");
  ASSERT_EQ(tsel({"select-fda", "--config", cfg.string(), "--seed", seed_, "--corpus", corpus_,
                  "--out", out("a")}).code, 0);
  EXPECT_EQ(nlohmann::json::parse(testing::slurp(dir_ / "a" / "manifest.json"))["selection_size"], 1);
  ASSERT_EQ(tsel({"select-fda", "--config", cfg.string(), "--seed", seed_, "--corpus", corpus_,
                  "--n", "5", "--out", out("b")}).code, 0);
  const auto m = nlohmann::json::parse(testing::slurp(dir_ / "b" / "manifest.json"));
  EXPECT_EQ(m["selection_size"], 2);
  EXPECT_EQ(m["config"]["decay_base"], 0.25);

  const auto bad = dir_.write("bad.cfg", "bogus = 1\n");
  EXPECT_EQ(tsel({"select-fda", "--config", bad.string(), "--seed", seed_, "--corpus", corpus_,
                  "--n", "1"}).code, 1);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  ::setenv("TSEL_OUTPUT_DIR", out("env").c_str(), 1);
  const auto r = tsel({"select-fda", "--seed", seed_, "--corpus", corpus_, "--n", "1", "--quiet"});
  const auto flag = tsel({"select-fda", "--seed", seed_, "--corpus", corpus_, "--n", "1",
                          "--out", out("flag"), "--quiet"});
  ::unsetenv("TSEL_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(flag.code, 0) << flag.err;
  EXPECT_TRUE(fs::exists(dir_ / "env" / "ranking.tsv"));
  EXPECT_TRUE(fs::exists(dir_ / "flag" / "ranking.tsv"));
}

TEST_F(CliTest, StatsReportsCoverage) {
  const auto sel = dir_.write("sel.txt", "a\n");
  const auto r = tsel({"stats", "--seed", seed_, "--selection", sel, "--saturation", "1",
                       "--out", out("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.500000"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(testing::slurp(dir_ / "s" / "coverage.json"));
  EXPECT_EQ(j["per_order"][0]["covered_types"], 1);
  EXPECT_EQ(j["saturated_types"], 1);

  const auto rank = dir_.write("r.tsv", ranking_tsv({1}));
  const auto r2 = tsel({"stats", "--seed", seed_, "--ranking", rank, "--corpus", corpus_,
                        "--out", out("s2")});
  ASSERT_EQ(r2.code, 0) << r2.err;
  const auto j2 = nlohmann::json::parse(testing::slurp(dir_ / "s2" / "coverage.json"));
  EXPECT_EQ(j2["per_order"][1]["coverage_ratio"], 1.0);
  EXPECT_EQ(tsel({"stats", "--seed", seed_, "--out", out("s3")}).code, 1);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  std::mt19937_64 rng(11);
  std::string text;
  for (const auto& s : testing::random_sentences(rng, 300, 30)) text += testing::join(s) + "\n";
  const auto corpus = dir_.write("big.txt", text);
  const std::vector<std::vector<std::string>> commands{
      {"select-fda", "--seed", seed_, "--corpus", corpus, "--n", "50"},
      {"select-inr", "--seed", seed_, "--corpus", corpus, "--n", "50", "--threshold", "2"}};
  for (std::size_t c = 0; c < commands.size(); ++c) {
    for (const char* run : {"1", "2"}) {
      auto args = commands[c];
      args.insert(args.end(), {"--out", out(std::to_string(c) + run), "--quiet"});
      ASSERT_EQ(tsel(args).code, 0);
    }
    for (const char* f : {"ranking.tsv", "selected.txt", "manifest.json"}) {
      EXPECT_EQ(testing::slurp(dir_ / (std::to_string(c) + "1") / f),
                testing::slurp(dir_ / (std::to_string(c) + "2") / f))
          << commands[c][0] << " " << f;
    }
  }
}

TEST_F(CliTest, HelpDocumentsReferenceValues) {
  const auto inr = tsel({"select-inr", "--help"});
  EXPECT_EQ(inr.code, 0);
  EXPECT_NE(inr.out.find("80"), std::string::npos);
  EXPECT_NE(inr.out.find("640"), std::string::npos);
  EXPECT_NE(inr.out.find("100000"), std::string::npos);
  const auto fda = tsel({"select-fda", "--help"});
  EXPECT_NE(fda.out.find("0.5"), std::string::npos);
  const auto comb = tsel({"combine", "--help"});
  EXPECT_NE(comb.out.find("0.75"), std::string::npos);
  EXPECT_EQ(tsel({"--version"}).code, 0);
}

}  // namespace
}  // namespace tsel

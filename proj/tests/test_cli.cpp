/* Copyright (c) 2026 Mathal Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

// End-to-end tests driving the installed binary through a shell, the way
// users run it. Requires POSIX popen.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mathal/masker.hpp"
#include "mathal/serialize.hpp"

using nlohmann::json;

namespace {

#ifndef MATHAL_CLI_PATH
#error "MATHAL_CLI_PATH must point at the built binary"
#endif
#ifndef MATHAL_DATA_DIR
#define MATHAL_DATA_DIR "data"
#endif

constexpr const char* kLexicon = MATHAL_DATA_DIR "/lexicon_sample.tsv";
constexpr const char* kTopics = MATHAL_DATA_DIR "/topics_sample.txt";
constexpr const char* kGold = MATHAL_DATA_DIR "/gold_sample.jsonl";

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the binary with `args` appended, returning its exit code and
/// stdout. stderr is discarded unless `merge_stderr` is set; stdin reads
/// from `stdin_path` or /dev/null.
CliResult run_cli(const std::string& args, const std::string& stdin_path = "",
                  bool merge_stderr = false) {
  std::string cmd = std::string("'") + MATHAL_CLI_PATH + "' " + args;
  cmd += stdin_path.empty() ? " < /dev/null" : " < '" + stdin_path + "'";
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr) << cmd;
  CliResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + "mathal_cli_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\t') {
      fields.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

std::string detect_args(const std::string& extra = "") {
  return std::string("detect --lexicon '") + kLexicon + "' " + extra;
}

}  // namespace

TEST(CliDetect, JsonRecordsOnShippedCorpus) {
  const CliResult r = run_cli(detect_args() + "'" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 2u);

  const json first = json::parse(out[0]);
  EXPECT_EQ(first.at("line"), 1);
  ASSERT_EQ(first.at("matches").size(), 1u);
  const json& m1 = first.at("matches").at(0);
  EXPECT_EQ(m1.at("idiom_id"), "idiom-7");
  EXPECT_EQ(m1.at("surface"), "حكم قراقوش");
  EXPECT_EQ(m1.at("polarity"), "NG");
  EXPECT_EQ(m1.at("char_span"), json({63, 73}));
  EXPECT_EQ(m1.at("token_span"), json({11, 13}));
  EXPECT_EQ(m1.at("cosine"), 1.0);
  EXPECT_EQ(m1.at("norm_edit"), 0.0);
  EXPECT_EQ(m1.at("pipeline"), "combined");

  const json second = json::parse(out[1]);
  EXPECT_EQ(second.at("line"), 2);
  ASSERT_EQ(second.at("matches").size(), 1u);
  const json& m2 = second.at("matches").at(0);
  EXPECT_EQ(m2.at("idiom_id"), "idiom-9");
  EXPECT_EQ(m2.at("char_span"), json({111, 128}));
  EXPECT_EQ(m2.at("token_span"), json({21, 24}));
}

TEST(CliDetect, TextFormat) {
  const CliResult r =
      run_cli(detect_args("--format text ") + "'" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("line 1: idiom-7 NG [63,73) cosine=1 norm_edit=0 "
                          "\"حكم قراقوش\""),
            std::string::npos)
      << r.output;
  EXPECT_NE(r.output.find("line 2: idiom-9 NG [111,128)"), std::string::npos);
}

TEST(CliDetect, TsvFormat) {
  const CliResult r =
      run_cli(detect_args("--format tsv ") + "'" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 2u);
  const std::vector<std::string> f = split_tabs(out[0]);
  ASSERT_EQ(f.size(), 10u);
  EXPECT_EQ(f[0], "1");
  EXPECT_EQ(f[1], "idiom-7");
  EXPECT_EQ(f[2], "NG");
  EXPECT_EQ(f[3], "63");
  EXPECT_EQ(f[4], "73");
  EXPECT_EQ(f[5], "11");
  EXPECT_EQ(f[6], "13");
  EXPECT_EQ(f[7], "1");
  EXPECT_EQ(f[8], "0");
  EXPECT_EQ(f[9], "حكم قراقوش");
}

TEST(CliDetect, ReadsStandardInput) {
  const std::string input = write_temp(
      "stdin.txt", "وانما في حكم قراقوش الموجود\n");
  const CliResult r = run_cli(detect_args(), input);
  ASSERT_EQ(r.exit_code, 0);
  const json rec = json::parse(lines_of(r.output).at(0));
  ASSERT_EQ(rec.at("matches").size(), 1u);
  EXPECT_EQ(rec.at("matches").at(0).at("idiom_id"), "idiom-7");
}

TEST(CliDetect, PipelineFlagSwitchesFilters) {
  const CliResult edit =
      run_cli(detect_args("--pipeline edit ") + "'" + kTopics + "'");
  ASSERT_EQ(edit.exit_code, 0);
  const json line1 = json::parse(lines_of(edit.output).at(0));
  ASSERT_EQ(line1.at("matches").size(), 2u);
  EXPECT_EQ(line1.at("matches").at(0).at("idiom_id"), "idiom-8");
  EXPECT_EQ(line1.at("matches").at(0).at("pipeline"), "edit");
  EXPECT_EQ(line1.at("matches").at(1).at("idiom_id"), "idiom-7");

  const CliResult cosine =
      run_cli(detect_args("--pipeline cosine ") + "'" + kTopics + "'");
  ASSERT_EQ(cosine.exit_code, 0);
  const json c1 = json::parse(lines_of(cosine.output).at(0));
  ASSERT_EQ(c1.at("matches").size(), 1u);
  EXPECT_EQ(c1.at("matches").at(0).at("idiom_id"), "idiom-7");
}

TEST(CliDetect, WholeDocumentMode) {
  const CliResult r =
      run_cli(detect_args("--document ") + "'" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 1u);
  const json rec = json::parse(out[0]);
  ASSERT_EQ(rec.at("matches").size(), 2u);
  EXPECT_EQ(rec.at("matches").at(0).at("idiom_id"), "idiom-7");
  EXPECT_EQ(rec.at("matches").at(1).at("idiom_id"), "idiom-9");
}

TEST(CliDetect, DeterministicOutput) {
  const std::string args = detect_args() + "'" + kTopics + "'";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_EQ(a.exit_code, b.exit_code);
}

TEST(CliMask, TextFormatReplacesSpans) {
  const CliResult r = run_cli(std::string("mask --lexicon '") + kLexicon +
                              "' '" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0],
            "قلتها وأكررها المشكلة ليست في الثورة، الي ثاروا ماتوا وانما في "
            "NG_Phrase الموجود حاليا");
  EXPECT_EQ(out[1],
            "انا مبكرهش حد قد ابو تريكة كلاعب لكن هو محترم طبعا في مواقفه "
            "ميدو الزملكاوي مش عاجبه تريكة انا زملكاويه وبقولك NG_Phrase "
            "ياكوتش");
}

TEST(CliMask, JsonRoundTripsThroughUnmask) {
  const CliResult r = run_cli(std::string("mask --format json --lexicon '") +
                              kLexicon + "' '" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 2u);
  std::ifstream topics(kTopics, std::ios::binary);
  std::string original;
  for (const std::string& line : out) {
    const mathal::MaskedDocument doc =
        mathal::masked_document_from_json(json::parse(line));
    ASSERT_TRUE(std::getline(topics, original));
    EXPECT_EQ(mathal::unmask(doc), original);
  }
}

TEST(CliMask, LinesWithoutIdiomsPassThrough) {
  const std::string input = write_temp("plain.txt", "صباح الخير يا جماعة\n");
  const CliResult r =
      run_cli(std::string("mask --lexicon '") + kLexicon + "'", input);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "صباح الخير يا جماعة\n");
}

TEST(CliMask, TsvFormatPrefixesLineNumber) {
  const CliResult r = run_cli(std::string("mask --format tsv --lexicon '") +
                              kLexicon + "' '" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  const std::vector<std::string> out = lines_of(r.output);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].substr(0, 2), "1\t");
  EXPECT_EQ(out[1].substr(0, 2), "2\t");
  EXPECT_NE(out[0].find("NG_Phrase"), std::string::npos);
}

TEST(CliScore, DefaultWeightOnShippedCorpus) {
  const CliResult r = run_cli(std::string("score --lexicon '") + kLexicon +
                              "' '" + kTopics + "'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "-3 NG\n-3 NG\n");
}

TEST(CliScore, WeightFlagScalesAndValidates) {
  const CliResult w1 = run_cli(std::string("score --idiom-weight 1 "
                                           "--lexicon '") +
                               kLexicon + "' '" + kTopics + "'");
  ASSERT_EQ(w1.exit_code, 0);
  EXPECT_EQ(w1.output, "-1 NG\n-1 NG\n");
  const CliResult w5 = run_cli(std::string("score --idiom-weight 5 "
                                           "--lexicon '") +
                               kLexicon + "' '" + kTopics + "'");
  EXPECT_EQ(w5.exit_code, 2);
}

TEST(CliScore, JsonAndTsvFormats) {
  const CliResult j = run_cli(std::string("score --format json --lexicon '") +
                              kLexicon + "' '" + kTopics + "'");
  ASSERT_EQ(j.exit_code, 0);
  const json rec = json::parse(lines_of(j.output).at(0));
  EXPECT_EQ(rec.at("net"), -3);
  EXPECT_EQ(rec.at("label"), "NG");
  EXPECT_EQ(rec.at("line"), 1);

  const CliResult t = run_cli(std::string("score --format tsv --lexicon '") +
                              kLexicon + "' '" + kTopics + "'");
  ASSERT_EQ(t.exit_code, 0);
  EXPECT_EQ(lines_of(t.output).at(0), "1\t-3\tNG");
}

TEST(CliScore, NeutralLineScoresZero) {
  const std::string input = write_temp("neutral.txt", "كلام عادي تماما\n");
  const CliResult r =
      run_cli(std::string("score --lexicon '") + kLexicon + "'", input);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "0 NEUTRAL\n");
}

TEST(CliEval, TextTableOnShippedGold) {
  const CliResult r = run_cli(std::string("eval --lexicon '") + kLexicon +
                              "' '" + kGold + "'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("pipeline"), std::string::npos);
  EXPECT_NE(r.output.find("cosine"), std::string::npos);
  EXPECT_NE(r.output.find("edit"), std::string::npos);
  EXPECT_NE(r.output.find("combined"), std::string::npos);
}

TEST(CliEval, JsonMetricsOnShippedGold) {
  const CliResult r = run_cli(std::string("eval --format json --lexicon '") +
                              kLexicon + "' '" + kGold + "'");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.output);
  EXPECT_EQ(j.at("combined").at("true_positives"), 2);
  EXPECT_EQ(j.at("combined").at("false_positives"), 0);
  EXPECT_EQ(j.at("combined").at("accuracy"), 1.0);
  EXPECT_EQ(j.at("edit").at("false_positives"), 1);
}

TEST(CliValidate, CleanLexiconExitsZero) {
  const CliResult r =
      run_cli(std::string("lexicon-validate '") + kLexicon + "'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("lexicon OK"), std::string::npos);
  EXPECT_NE(r.output.find("0 errors, 0 warnings"), std::string::npos);
}

TEST(CliValidate, BrokenLexiconExitsOne) {
  const std::string path =
      write_temp("broken.tsv", "قراقوش\tgloss\tqrAqw$\tNG\n");
  const CliResult r = run_cli("lexicon-validate '" + path + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("error"), std::string::npos);

  const CliResult j = run_cli("lexicon-validate --format json '" + path + "'");
  EXPECT_EQ(j.exit_code, 1);
  EXPECT_TRUE(json::parse(j.output).at("has_errors").get<bool>());
}

TEST(CliTranslit, RomanizesAndReverses) {
  const CliResult fwd = run_cli("translit 'حكم قراقوش'");
  ASSERT_EQ(fwd.exit_code, 0);
  EXPECT_EQ(fwd.output, "Hkm qrAqw$\n");

  const CliResult rev = run_cli("translit --reverse 'Hkm qrAqw$'");
  ASSERT_EQ(rev.exit_code, 0);
  EXPECT_EQ(rev.output, "حكم قراقوش\n");
}

TEST(CliTranslit, ReadsLinesFromStandardInput) {
  const std::string input = write_temp("translit.txt", "حكم\nقراقوش\n");
  const CliResult r = run_cli("translit", input);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "Hkm\nqrAqw$\n");
}

TEST(CliTranslit, UnmappableCharacterIsARuntimeError) {
  const CliResult r = run_cli("translit 'حكـم'", "", /*merge_stderr=*/true);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("error"), std::string::npos);

  const CliResult rev =
      run_cli("translit --reverse 'Hkm_qrAqw'", "", /*merge_stderr=*/true);
  EXPECT_EQ(rev.exit_code, 1);
  EXPECT_NE(rev.output.find("offset 3"), std::string::npos) << rev.output;
}

TEST(CliErrors, UsageProblemsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);  // missing subcommand
  EXPECT_EQ(run_cli("detect").exit_code, 2);  // missing --lexicon
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli(detect_args("--bogus-flag ")).exit_code, 2);
  EXPECT_EQ(run_cli(detect_args("--pipeline sideways ")).exit_code, 2);
  EXPECT_EQ(run_cli(detect_args("--cosine-threshold 1.5 ")).exit_code, 2);
  EXPECT_EQ(run_cli(detect_args("--edit-threshold 2 ")).exit_code, 2);
  EXPECT_EQ(run_cli(std::string("eval --lexicon '") + kLexicon + "'")
                .exit_code,
            2);  // missing gold positional
}

TEST(CliErrors, DataProblemsExitOne) {
  EXPECT_EQ(run_cli(detect_args() + "/nonexistent/input.txt").exit_code, 1);
  EXPECT_EQ(
      run_cli("detect --lexicon /nonexistent/lexicon.tsv '" +
              std::string(kTopics) + "'")
          .exit_code,
      1);
  const std::string bad_utf8 = write_temp("bad_utf8.txt", "\xFF\xFE ok\n");
  EXPECT_EQ(run_cli(detect_args() + "'" + bad_utf8 + "'").exit_code, 1);
  const std::string bad_gold = write_temp("bad_gold.jsonl", "{not json\n");
  EXPECT_EQ(run_cli(std::string("eval --lexicon '") + kLexicon + "' '" +
                    bad_gold + "'")
                .exit_code,
            1);
}

TEST(CliHelp, ExitsZero) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("detect --help").exit_code, 0);
}

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

// Command-line front end: detect / mask / score / eval /
// lexicon-validate / translit over UTF-8 text. Exit codes: 0 success,
// 1 runtime or data error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mathal/mathal.hpp"

namespace {

// Flag values that fail semantic validation are usage errors (exit 2),
// unlike runtime failures in data or I/O (exit 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string lexicon_path;
  std::string pipeline = "combined";
  double cosine_threshold = 0.7;
  double edit_threshold = 0.25;
  std::string vector_mode = "word";
  std::string format;
  bool whole_document = false;
  std::string input_path;  // empty: standard input
};

void add_detector_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--lexicon", o.lexicon_path, "Idiom lexicon TSV file")
      ->required();
  cmd->add_option("--pipeline", o.pipeline,
                  "Filter chain: cosine, edit, or combined")
      ->check(CLI::IsMember({"cosine", "edit", "combined"}));
  cmd->add_option("--cosine-threshold", o.cosine_threshold,
                  "Keep candidates with cosine strictly above this");
  cmd->add_option("--edit-threshold", o.edit_threshold,
                  "Keep candidates with normalized edit distance at most this");
  cmd->add_option("--vector-mode", o.vector_mode,
                  "Cosine term granularity: word or char")
      ->check(CLI::IsMember({"word", "char"}));
  cmd->add_flag("--document", o.whole_document,
                "Treat the whole input as one document instead of one "
                "document per line");
  cmd->add_option("input", o.input_path,
                  "Input file (default: standard input)");
}

void add_format_flag(CLI::App* cmd, CommonOpts& o,
                     const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
}

mathal::DetectorConfig make_config(const CommonOpts& o) {
  try {
    mathal::DetectorConfig cfg;
    cfg.cosine_threshold = o.cosine_threshold;
    cfg.norm_edit_threshold = o.edit_threshold;
    cfg.vector_mode = o.vector_mode == "char" ? mathal::VectorMode::kCharTf
                                              : mathal::VectorMode::kWordTf;
    cfg.pipeline = mathal::parse_pipeline(o.pipeline);
    cfg.validate();
    return cfg;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// One entry per processing unit: input lines, or the whole input when
// `whole` is set.
std::vector<std::string> read_input(const std::string& path, bool whole) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input: " + path);
    in = &file;
  }
  std::vector<std::string> units;
  if (whole) {
    std::ostringstream buffer;
    buffer << in->rdbuf();
    units.push_back(buffer.str());
  } else {
    std::string line;
    while (std::getline(*in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      units.push_back(line);
    }
  }
  if (in->bad()) throw std::runtime_error("input read failure");
  return units;
}

mathal::Lexicon load_lexicon_reporting(const std::string& path) {
  mathal::LoadResult loaded = mathal::load_lexicon_file(path);
  for (const mathal::LoadIssue& issue : loaded.issues) {
    std::cerr << "warning: lexicon line " << issue.line << ": "
              << issue.message << "\n";
  }
  return std::move(loaded.lexicon);
}

std::string slice_codepoints(const std::string& text, std::size_t from,
                             std::size_t to) {
  const std::u32string cps = mathal::unicode::decode_utf8(text);
  return mathal::unicode::encode_utf8(
      std::u32string_view(cps).substr(from, to - from));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int run_detect(const CommonOpts& o) {
  const mathal::DetectorConfig cfg = make_config(o);
  const mathal::Lexicon lexicon = load_lexicon_reporting(o.lexicon_path);
  const std::vector<std::string> units =
      read_input(o.input_path, o.whole_document);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::vector<mathal::Match> matches =
        mathal::detect(units[i], lexicon, cfg);
    if (o.format == "json") {
      nlohmann::json obj{
          {"line", i + 1},
          {"matches", mathal::matches_to_json(matches, lexicon, cfg.pipeline)},
      };
      std::cout << obj.dump() << "\n";
    } else if (o.format == "tsv") {
      for (const mathal::Match& m : matches) {
        std::cout << i + 1 << '\t' << m.idiom_id << '\t'
                  << mathal::polarity_tag(m.polarity) << '\t' << m.char_start
                  << '\t' << m.char_end << '\t' << m.token_start << '\t'
                  << m.token_end << '\t' << format_double(m.cosine_score)
                  << '\t' << format_double(m.norm_edit) << '\t'
                  << slice_codepoints(units[i], m.char_start, m.char_end)
                  << "\n";
      }
    } else {
      for (const mathal::Match& m : matches) {
        std::cout << "line " << i + 1 << ": " << m.idiom_id << " "
                  << mathal::polarity_tag(m.polarity) << " [" << m.char_start
                  << "," << m.char_end
                  << ") cosine=" << format_double(m.cosine_score)
                  << " norm_edit=" << format_double(m.norm_edit) << " \""
                  << slice_codepoints(units[i], m.char_start, m.char_end)
                  << "\"\n";
      }
    }
  }
  return 0;
}

int run_mask(const CommonOpts& o) {
  const mathal::DetectorConfig cfg = make_config(o);
  const mathal::Lexicon lexicon = load_lexicon_reporting(o.lexicon_path);
  const std::vector<std::string> units =
      read_input(o.input_path, o.whole_document);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const mathal::MaskedDocument doc =
        mathal::mask(units[i], mathal::detect(units[i], lexicon, cfg));
    if (o.format == "json") {
      nlohmann::json obj = mathal::masked_document_to_json(doc);
      obj["line"] = i + 1;
      std::cout << obj.dump() << "\n";
    } else if (o.format == "tsv") {
      std::cout << i + 1 << '\t' << doc.masked_text << "\n";
    } else {
      std::cout << doc.masked_text << "\n";
    }
  }
  return 0;
}

int run_score(const CommonOpts& o, int idiom_weight) {
  const mathal::DetectorConfig cfg = make_config(o);
  const mathal::Lexicon lexicon = load_lexicon_reporting(o.lexicon_path);
  const std::vector<std::string> units =
      read_input(o.input_path, o.whole_document);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const mathal::SentimentScore s = mathal::score(
        mathal::detect(units[i], lexicon, cfg), idiom_weight);
    if (o.format == "json") {
      nlohmann::json obj = mathal::score_to_json(s);
      obj["line"] = i + 1;
      std::cout << obj.dump() << "\n";
    } else if (o.format == "tsv") {
      std::cout << i + 1 << '\t' << s.net << '\t'
                << mathal::sentiment_label_tag(s.label) << "\n";
    } else {
      std::cout << s.net << " " << mathal::sentiment_label_tag(s.label)
                << "\n";
    }
  }
  return 0;
}

int run_eval(const CommonOpts& o, const std::string& gold_path) {
  const mathal::DetectorConfig cfg = make_config(o);
  const mathal::Lexicon lexicon = load_lexicon_reporting(o.lexicon_path);
  const std::vector<mathal::GoldDocument> corpus =
      mathal::load_gold_corpus_file(gold_path);
  const mathal::EvalReport report = mathal::evaluate(corpus, lexicon, cfg);
  if (o.format == "json") {
    std::cout << mathal::eval_report_to_json(report).dump() << "\n";
  } else {
    std::cout << report.to_text();
  }
  return 0;
}

int run_lexicon_validate(const std::string& path, const std::string& format) {
  const mathal::Lexicon lexicon = load_lexicon_reporting(path);
  const mathal::ValidationReport report = mathal::validate_lexicon(lexicon);
  std::size_t errors = 0;
  std::size_t warnings = 0;
  for (const mathal::ValidationIssue& i : report.issues) {
    (i.severity == mathal::IssueSeverity::kError ? errors : warnings)++;
  }
  if (format == "json") {
    std::cout << mathal::validation_report_to_json(report).dump() << "\n";
  } else {
    std::cout << report.to_text();
    std::cout << errors << " errors, " << warnings << " warnings\n";
  }
  return report.has_errors() ? 1 : 0;
}

int run_translit(const std::string& text, bool has_text, bool reverse) {
  auto convert = [&](const std::string& s) {
    return reverse ? mathal::buckwalter::from_buckwalter(s)
                   : mathal::buckwalter::to_buckwalter(s);
  };
  if (has_text) {
    std::cout << convert(text) << "\n";
    return 0;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::cout << convert(line) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arabic idiom/proverb detection, masking, and sentiment scoring"};
  app.require_subcommand(1);

  CommonOpts detect_opts;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Detect idioms and print the matches");
  add_detector_flags(detect_cmd, detect_opts);
  add_format_flag(detect_cmd, detect_opts, "json");

  CommonOpts mask_opts;
  CLI::App* mask_cmd = app.add_subcommand(
      "mask", "Replace detected idiom spans with polarity masks");
  add_detector_flags(mask_cmd, mask_opts);
  add_format_flag(mask_cmd, mask_opts, "text");

  CommonOpts score_opts;
  int idiom_weight = 3;
  CLI::App* score_cmd =
      app.add_subcommand("score", "Net idiom sentiment per document");
  add_detector_flags(score_cmd, score_opts);
  add_format_flag(score_cmd, score_opts, "text");
  score_cmd
      ->add_option("--idiom-weight", idiom_weight,
                   "Score magnitude contributed by each detected idiom")
      ->check(CLI::Range(1, 3));

  CommonOpts eval_opts;
  std::string gold_path;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Score all three pipelines against a gold corpus (JSONL)");
  eval_cmd->add_option("--lexicon", eval_opts.lexicon_path,
                       "Idiom lexicon TSV file")
      ->required();
  eval_cmd->add_option("--cosine-threshold", eval_opts.cosine_threshold,
                       "Keep candidates with cosine strictly above this");
  eval_cmd->add_option("--edit-threshold", eval_opts.edit_threshold,
                       "Keep candidates with normalized edit distance at "
                       "most this");
  eval_cmd->add_option("--vector-mode", eval_opts.vector_mode,
                       "Cosine term granularity: word or char")
      ->check(CLI::IsMember({"word", "char"}));
  eval_cmd->add_option("gold", gold_path, "Gold corpus JSONL file")
      ->required();
  add_format_flag(eval_cmd, eval_opts, "text");

  std::string validate_path;
  std::string validate_format = "text";
  CLI::App* validate_cmd = app.add_subcommand(
      "lexicon-validate", "Check a lexicon file and report problems");
  validate_cmd->add_option("lexicon", validate_path, "Idiom lexicon TSV file")
      ->required();
  validate_cmd->add_option("--format", validate_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string translit_text;
  bool translit_reverse = false;
  CLI::App* translit_cmd = app.add_subcommand(
      "translit", "Romanize Arabic text (or the reverse with --reverse)");
  CLI::Option* translit_arg = translit_cmd->add_option(
      "text", translit_text, "Text to convert (default: standard input)");
  translit_cmd->add_flag("--reverse", translit_reverse,
                         "Convert romanized text back to Arabic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (detect_cmd->parsed()) return run_detect(detect_opts);
    if (mask_cmd->parsed()) return run_mask(mask_opts);
    if (score_cmd->parsed()) return run_score(score_opts, idiom_weight);
    if (eval_cmd->parsed()) return run_eval(eval_opts, gold_path);
    if (validate_cmd->parsed()) {
      return run_lexicon_validate(validate_path, validate_format);
    }
    if (translit_cmd->parsed()) {
      return run_translit(translit_text, translit_arg->count() > 0,
                          translit_reverse);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

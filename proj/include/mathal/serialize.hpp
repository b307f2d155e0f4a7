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

#ifndef MATHAL_SERIALIZE_HPP
#define MATHAL_SERIALIZE_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mathal/detector.hpp"
#include "mathal/eval.hpp"
#include "mathal/lexicon.hpp"
#include "mathal/masker.hpp"

namespace mathal {

/// JSON record for one match; `lexicon` supplies the matched entry's
/// surface form, `pipeline` records which filter chain produced it.
inline nlohmann::json match_to_json(const Match& m, const Lexicon& lexicon,
                                    Pipeline pipeline) {
  const IdiomEntry* entry = lexicon.find_by_id(m.idiom_id);
  return nlohmann::json{
      {"idiom_id", m.idiom_id},
      {"surface", entry ? entry->surface : ""},
      {"polarity", polarity_tag(m.polarity)},
      {"char_span", {m.char_start, m.char_end}},
      {"token_span", {m.token_start, m.token_end}},
      {"cosine", m.cosine_score},
      {"norm_edit", m.norm_edit},
      {"pipeline", pipeline_name(pipeline)},
  };
}

inline nlohmann::json matches_to_json(const std::vector<Match>& matches,
                                      const Lexicon& lexicon,
                                      Pipeline pipeline) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Match& m : matches) {
    arr.push_back(match_to_json(m, lexicon, pipeline));
  }
  return arr;
}

inline nlohmann::json masked_document_to_json(const MaskedDocument& doc) {
  nlohmann::json replacements = nlohmann::json::array();
  for (const Replacement& r : doc.replacements) {
    replacements.push_back({
        {"char_span", {r.char_start, r.char_end}},
        {"mask", r.mask},
        {"original", r.original},
        {"idiom_id", r.idiom_id},
        {"polarity", polarity_tag(r.polarity)},
    });
  }
  return nlohmann::json{{"masked_text", doc.masked_text},
                        {"replacements", replacements}};
}

/// Inverse of masked_document_to_json, so emitted documents can be
/// unmasked (or audited) by other processes.
inline MaskedDocument masked_document_from_json(const nlohmann::json& j) {
  MaskedDocument doc;
  doc.masked_text = j.at("masked_text").get<std::string>();
  for (const nlohmann::json& rj : j.at("replacements")) {
    Replacement r;
    r.char_start = rj.at("char_span").at(0).get<std::size_t>();
    r.char_end = rj.at("char_span").at(1).get<std::size_t>();
    r.mask = rj.at("mask").get<std::string>();
    r.original = rj.at("original").get<std::string>();
    r.idiom_id = rj.at("idiom_id").get<std::string>();
    r.polarity = parse_polarity(rj.at("polarity").get<std::string>());
    doc.replacements.push_back(std::move(r));
  }
  return doc;
}

inline nlohmann::json score_to_json(const SentimentScore& s) {
  return nlohmann::json{{"net", s.net},
                        {"label", sentiment_label_tag(s.label)}};
}

inline nlohmann::json validation_report_to_json(const ValidationReport& r) {
  nlohmann::json issues = nlohmann::json::array();
  for (const ValidationIssue& i : r.issues) {
    issues.push_back({
        {"severity",
         i.severity == IssueSeverity::kError ? "error" : "warning"},
        {"entry_id", i.entry_id},
        {"message", i.message},
    });
  }
  return nlohmann::json{{"issues", issues}, {"has_errors", r.has_errors()}};
}

inline nlohmann::json eval_report_to_json(const EvalReport& r) {
  nlohmann::json out;
  for (Pipeline p :
       {Pipeline::kCosineOnly, Pipeline::kEditOnly, Pipeline::kCombined}) {
    const PipelineMetrics& m = r.for_pipeline(p);
    out[std::string(pipeline_name(p))] = {
        {"true_positives", m.true_positives},
        {"false_positives", m.false_positives},
        {"false_negatives", m.false_negatives},
        {"precision", m.precision},
        {"recall", m.recall},
        {"f1", m.f1},
        {"accuracy", m.accuracy},
    };
  }
  return out;
}

inline GoldDocument gold_document_from_json(const nlohmann::json& j) {
  GoldDocument doc;
  doc.text = j.at("text").get<std::string>();
  if (j.contains("gold")) {
    for (const nlohmann::json& gj : j.at("gold")) {
      GoldSpan g;
      g.char_start = gj.at("char_span").at(0).get<std::size_t>();
      g.char_end = gj.at("char_span").at(1).get<std::size_t>();
      g.idiom_id = gj.at("idiom_id").get<std::string>();
      g.polarity = parse_polarity(gj.at("polarity").get<std::string>());
      doc.gold.push_back(std::move(g));
    }
  }
  return doc;
}

inline nlohmann::json gold_document_to_json(const GoldDocument& doc) {
  nlohmann::json gold = nlohmann::json::array();
  for (const GoldSpan& g : doc.gold) {
    gold.push_back({
        {"char_span", {g.char_start, g.char_end}},
        {"idiom_id", g.idiom_id},
        {"polarity", polarity_tag(g.polarity)},
    });
  }
  return nlohmann::json{{"text", doc.text}, {"gold", gold}};
}

/// Reads a JSON Lines gold corpus: one document object per non-blank
/// line. Parse failures carry the 1-based line number.
inline std::vector<GoldDocument> load_gold_corpus(std::istream& in) {
  std::vector<GoldDocument> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      corpus.push_back(gold_document_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("gold corpus line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  if (in.bad()) throw std::runtime_error("gold corpus stream read failure");
  return corpus;
}

inline std::vector<GoldDocument> load_gold_corpus_file(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open gold corpus: " + path);
  return load_gold_corpus(in);
}

}  // namespace mathal

#endif  // MATHAL_SERIALIZE_HPP

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

#ifndef MATHAL_EVAL_HPP
#define MATHAL_EVAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "mathal/detector.hpp"
#include "mathal/lexicon.hpp"
#include "mathal/unicode.hpp"

namespace mathal {

/// A hand-labeled idiom occurrence: char span (Unicode scalar offsets,
/// half-open) plus the lexicon id it realizes.
struct GoldSpan {
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::string idiom_id;
  Polarity polarity = Polarity::kNegative;
};

struct GoldDocument {
  std::string text;
  std::vector<GoldSpan> gold;  // non-overlapping, in bounds
};

struct PipelineMetrics {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  double accuracy = 1.0;
};

namespace detail {

// The degenerate cases follow the usual extraction-metric conventions:
// an undefined ratio with nothing predicted and nothing to find counts as
// perfect, and f1 is 0 when both precision and recall are 0.
inline void derive_metrics(PipelineMetrics& m) {
  const double tp = static_cast<double>(m.true_positives);
  m.precision = m.true_positives + m.false_positives == 0
                    ? 1.0
                    : tp / static_cast<double>(m.true_positives +
                                               m.false_positives);
  m.recall = m.true_positives + m.false_negatives == 0
                 ? 1.0
                 : tp / static_cast<double>(m.true_positives +
                                            m.false_negatives);
  m.f1 = m.precision + m.recall == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  const std::size_t all =
      m.true_positives + m.false_positives + m.false_negatives;
  m.accuracy = all == 0 ? 1.0 : tp / static_cast<double>(all);
}

inline std::size_t span_overlap(std::size_t a_start, std::size_t a_end,
                                std::size_t b_start, std::size_t b_end) {
  const std::size_t lo = std::max(a_start, b_start);
  const std::size_t hi = std::min(a_end, b_end);
  return hi > lo ? hi - lo : 0;
}

}  // namespace detail

/// Span-level scores for the three pipelines over one corpus.
struct EvalReport {
  std::array<PipelineMetrics, 3> per_pipeline;

  const PipelineMetrics& for_pipeline(Pipeline p) const {
    return per_pipeline[static_cast<std::size_t>(p)];
  }
  PipelineMetrics& for_pipeline(Pipeline p) {
    return per_pipeline[static_cast<std::size_t>(p)];
  }

  std::string to_text() const {
    std::string out =
        "# span-level scores; a prediction is correct when it overlaps a\n"
        "# gold span of the same idiom by more than half the gold length;\n"
        "# accuracy = TP / (TP + FP + FN)\n";
    out +=
        "pipeline  TP    FP    FN    precision  recall  f1      accuracy\n";
    for (Pipeline p :
         {Pipeline::kCosineOnly, Pipeline::kEditOnly, Pipeline::kCombined}) {
      const PipelineMetrics& m = for_pipeline(p);
      char line[160];
      std::snprintf(line, sizeof(line),
                    "%-8s  %-4zu  %-4zu  %-4zu  %-9.4f  %-6.4f  %-6.4f  %.4f\n",
                    std::string(pipeline_name(p)).c_str(), m.true_positives,
                    m.false_positives, m.false_negatives, m.precision,
                    m.recall, m.f1, m.accuracy);
      out += line;
    }
    return out;
  }
};

/// Runs detect over the corpus once per pipeline and scores predictions
/// against the gold spans. Each prediction may claim at most one gold
/// span (same idiom id, overlap strictly greater than half the gold
/// length); unclaimed gold spans count as misses. Throws
/// std::invalid_argument on an empty corpus or malformed gold spans.
inline EvalReport evaluate(const std::vector<GoldDocument>& corpus,
                           const Lexicon& lexicon,
                           const DetectorConfig& config = {}) {
  if (corpus.empty()) {
    throw std::invalid_argument("evaluate requires a non-empty corpus");
  }
  for (const GoldDocument& doc : corpus) {
    const std::size_t len = unicode::decode_utf8(doc.text).size();
    std::vector<const GoldSpan*> sorted;
    for (const GoldSpan& g : doc.gold) {
      if (g.char_start >= g.char_end || g.char_end > len) {
        throw std::invalid_argument("gold span out of bounds");
      }
      sorted.push_back(&g);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const GoldSpan* a, const GoldSpan* b) {
                return a->char_start < b->char_start;
              });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i - 1]->char_end > sorted[i]->char_start) {
        throw std::invalid_argument("gold spans overlap");
      }
    }
  }

  EvalReport report;
  for (Pipeline p :
       {Pipeline::kCosineOnly, Pipeline::kEditOnly, Pipeline::kCombined}) {
    DetectorConfig mode_config = config;
    mode_config.pipeline = p;
    PipelineMetrics& m = report.for_pipeline(p);
    m = PipelineMetrics{};
    for (const GoldDocument& doc : corpus) {
      const std::vector<Match> predicted =
          detect(doc.text, lexicon, mode_config);
      std::vector<bool> claimed(doc.gold.size(), false);
      for (const Match& pred : predicted) {
        bool hit = false;
        for (std::size_t gi = 0; gi < doc.gold.size(); ++gi) {
          const GoldSpan& g = doc.gold[gi];
          if (claimed[gi] || g.idiom_id != pred.idiom_id) continue;
          const std::size_t ov = detail::span_overlap(
              pred.char_start, pred.char_end, g.char_start, g.char_end);
          if (2 * ov > g.char_end - g.char_start) {
            claimed[gi] = true;
            hit = true;
            break;
          }
        }
        hit ? ++m.true_positives : ++m.false_positives;
      }
      for (bool c : claimed) {
        if (!c) ++m.false_negatives;
      }
    }
    detail::derive_metrics(m);
  }
  return report;
}

/// Chance-corrected agreement between two annotators' polarity labels.
/// (p_o - p_e) / (1 - p_e); degenerate p_e = 1 (both annotators constant
/// with the same label) is full agreement, 1.0.
inline double cohen_kappa(const std::vector<Polarity>& a,
                          const std::vector<Polarity>& b) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument(
        "cohen_kappa requires two equal-length non-empty label lists");
  }
  const double n = static_cast<double>(a.size());
  std::size_t agree = 0;
  std::size_t a_pos = 0;
  std::size_t b_pos = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
    if (a[i] == Polarity::kPositive) ++a_pos;
    if (b[i] == Polarity::kPositive) ++b_pos;
  }
  const double p_o = static_cast<double>(agree) / n;
  const double pa = static_cast<double>(a_pos) / n;
  const double pb = static_cast<double>(b_pos) / n;
  const double p_e = pa * pb + (1.0 - pa) * (1.0 - pb);
  if (p_e == 1.0) return 1.0;
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace mathal

#endif  // MATHAL_EVAL_HPP

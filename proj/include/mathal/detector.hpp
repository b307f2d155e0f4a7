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

#ifndef MATHAL_DETECTOR_HPP
#define MATHAL_DETECTOR_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathal/lexicon.hpp"
#include "mathal/normalize.hpp"
#include "mathal/similarity.hpp"

namespace mathal {

/// Which filters run. kCombined chains the cosine filter and the edit
/// filter; the single-filter modes exist to compare the stages in
/// isolation.
enum class Pipeline { kCosineOnly, kEditOnly, kCombined };

inline constexpr std::string_view pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::kCosineOnly: return "cosine";
    case Pipeline::kEditOnly: return "edit";
    default: return "combined";
  }
}

inline Pipeline parse_pipeline(std::string_view name) {
  if (name == "cosine") return Pipeline::kCosineOnly;
  if (name == "edit") return Pipeline::kEditOnly;
  if (name == "combined") return Pipeline::kCombined;
  throw std::invalid_argument("unknown pipeline \"" + std::string(name) +
                              "\" (expected cosine, edit, or combined)");
}

struct DetectorConfig {
  // Candidates survive the cosine stage only strictly above this.
  double cosine_threshold = 0.7;
  // ...and the edit stage at or below this (inclusive, so that e.g. one
  // substitution in a 4-character word is still accepted at 0.25).
  double norm_edit_threshold = 0.25;
  VectorMode vector_mode = VectorMode::kWordTf;
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  Pipeline pipeline = Pipeline::kCombined;
  // Inverted-index pruning. Applied only where it provably cannot change
  // the result (word vectors + a cosine-filtering pipeline); harmless to
  // leave on.
  bool use_prefilter = true;

  void validate() const {
    if (!(cosine_threshold > 0.0 && cosine_threshold < 1.0)) {
      throw std::invalid_argument("cosine_threshold must be in (0, 1)");
    }
    if (!(norm_edit_threshold >= 0.0 && norm_edit_threshold <= 1.0)) {
      throw std::invalid_argument("norm_edit_threshold must be in [0, 1]");
    }
    if (min_n < 2 || min_n > max_n) {
      throw std::invalid_argument("window sizes must satisfy 2 <= min <= max");
    }
  }
};

/// One n-gram window over the tokenized input. Token span is half-open;
/// char offsets are Unicode scalar offsets into the original string, from
/// the first token's start to the last token's end.
struct CandidatePhrase {
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool operator==(const CandidatePhrase&) const = default;
};

/// A (candidate, idiom) pair that survived the configured filters.
struct ScoredCandidate {
  CandidatePhrase candidate;
  std::size_t entry_index = 0;
  std::string idiom_id;
  double cosine_score = 0.0;
  std::size_t edit_distance = 0;
  double norm_edit = 0.0;
};

/// An accepted detection. Matches returned together never overlap in
/// token span.
struct Match {
  std::string idiom_id;
  std::size_t entry_index = 0;
  Polarity polarity = Polarity::kNegative;
  std::size_t token_start = 0;
  std::size_t token_end = 0;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  double cosine_score = 0.0;
  double norm_edit = 0.0;

  bool operator==(const Match&) const = default;
};

/// Every contiguous window of min_n..max_n tokens, shorter windows
/// first, left to right within each size.
inline std::vector<CandidatePhrase> generate_candidates(
    const TokenizedText& text, const DetectorConfig& config = {}) {
  std::vector<CandidatePhrase> out;
  const std::size_t total = text.tokens.size();
  for (std::size_t n = config.min_n; n <= config.max_n; ++n) {
    if (n > total) break;
    for (std::size_t start = 0; start + n <= total; ++start) {
      CandidatePhrase c;
      c.token_start = start;
      c.token_end = start + n;
      c.text = join_tokens(text, start, start + n);
      c.char_start = text.tokens[start].char_start;
      c.char_end = text.tokens[start + n - 1].char_end;
      out.push_back(std::move(c));
    }
  }
  return out;
}

struct PrefilteredCandidate {
  CandidatePhrase candidate;
  std::vector<std::size_t> entry_indices;  // ascending, deduplicated
};

/// Pairs each candidate with the lexicon entries sharing at least one
/// token with it; candidates sharing nothing are dropped. With word
/// vectors this loses no pair the cosine stage could keep, since zero
/// shared terms means cosine 0.
inline std::vector<PrefilteredCandidate> prefilter(
    const std::vector<CandidatePhrase>& candidates, const Lexicon& lexicon) {
  std::vector<PrefilteredCandidate> out;
  std::vector<std::string> terms;
  for (const CandidatePhrase& c : candidates) {
    terms.clear();
    std::size_t start = 0;
    for (;;) {
      std::size_t space = c.text.find(' ', start);
      terms.push_back(c.text.substr(start, space - start));
      if (space == std::string::npos) break;
      start = space + 1;
    }
    std::vector<std::size_t> hits;
    for (const std::string& term : terms) {
      const std::vector<std::size_t>& postings =
          lexicon.entries_with_term(term);
      hits.insert(hits.end(), postings.begin(), postings.end());
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (!hits.empty()) out.push_back({c, std::move(hits)});
  }
  return out;
}

namespace detail {

inline bool token_spans_overlap(std::size_t a_start, std::size_t a_end,
                                std::size_t b_start, std::size_t b_end) {
  return a_start < b_end && b_start < a_end;
}

}  // namespace detail

/// Runs the full pipeline over pre-tokenized text: n-gram candidates,
/// index prefilter, cosine filter, edit filter, per-idiom best-distance
/// selection, then greedy overlap resolution ordered by (norm_edit
/// ascending, cosine descending, window length descending, start
/// ascending). Result is sorted by char_start. Throws on an empty
/// lexicon or invalid config.
inline std::vector<Match> detect(const TokenizedText& text,
                                 const Lexicon& lexicon,
                                 const DetectorConfig& config = {}) {
  config.validate();
  if (lexicon.empty()) {
    throw std::invalid_argument("detect requires a non-empty lexicon");
  }

  const std::vector<CandidatePhrase> candidates =
      generate_candidates(text, config);

  // Entry vectors are reused across candidates. Entries whose token count
  // falls outside the window range can never align with any candidate and
  // are skipped outright.
  std::vector<std::optional<TermVector>> entry_vectors(lexicon.size());
  for (std::size_t i = 0; i < lexicon.size(); ++i) {
    const IdiomEntry& e = lexicon.entry(i);
    if (e.tokens.size() < config.min_n || e.tokens.size() > config.max_n) {
      continue;
    }
    entry_vectors[i] =
        vectorize(e.tokens.begin(), e.tokens.end(), config.vector_mode);
  }

  // The prefilter is a pure pruning step only when a zero-term-overlap
  // pair is guaranteed dead, i.e. word vectors feeding a cosine filter.
  const bool prune = config.use_prefilter &&
                     config.vector_mode == VectorMode::kWordTf &&
                     config.pipeline != Pipeline::kEditOnly;

  std::vector<std::pair<CandidatePhrase, std::vector<std::size_t>>> pairs;
  if (prune) {
    for (PrefilteredCandidate& p : prefilter(candidates, lexicon)) {
      pairs.emplace_back(std::move(p.candidate), std::move(p.entry_indices));
    }
  } else {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < lexicon.size(); ++i) all.push_back(i);
    for (const CandidatePhrase& c : candidates) pairs.emplace_back(c, all);
  }

  std::vector<ScoredCandidate> survivors;
  for (const auto& [candidate, entry_indices] : pairs) {
    std::vector<std::string> cand_tokens;
    for (std::size_t k = candidate.token_start; k < candidate.token_end; ++k) {
      cand_tokens.push_back(text.tokens[k].text);
    }
    const TermVector cand_vec =
        vectorize(cand_tokens.begin(), cand_tokens.end(), config.vector_mode);
    for (std::size_t entry_index : entry_indices) {
      if (!entry_vectors[entry_index]) continue;
      const IdiomEntry& entry = lexicon.entry(entry_index);
      const double cos = cosine(cand_vec, *entry_vectors[entry_index]);
      if (config.pipeline != Pipeline::kEditOnly &&
          !(cos > config.cosine_threshold)) {
        continue;
      }
      const std::size_t dist =
          levenshtein(candidate.text, entry.normalized_surface);
      const std::size_t longest =
          std::max(unicode::decode_utf8(candidate.text).size(),
                   unicode::decode_utf8(entry.normalized_surface).size());
      const double ne =
          longest == 0 ? 0.0
                       : static_cast<double>(dist) /
                             static_cast<double>(longest);
      if (config.pipeline != Pipeline::kCosineOnly &&
          ne > config.norm_edit_threshold) {
        continue;
      }
      ScoredCandidate sc;
      sc.candidate = candidate;
      sc.entry_index = entry_index;
      sc.idiom_id = entry.id;
      sc.cosine_score = cos;
      sc.edit_distance = dist;
      sc.norm_edit = ne;
      survivors.push_back(std::move(sc));
    }
  }

  // Per idiom, only the closest-by-edit candidates stay in contention;
  // a sloppier window of idiom A must not outlive A's own best window.
  if (config.pipeline != Pipeline::kCosineOnly) {
    std::vector<double> best(lexicon.size(), 2.0);
    for (const ScoredCandidate& sc : survivors) {
      best[sc.entry_index] = std::min(best[sc.entry_index], sc.norm_edit);
    }
    std::erase_if(survivors, [&](const ScoredCandidate& sc) {
      return sc.norm_edit > best[sc.entry_index];
    });
  }

  std::stable_sort(
      survivors.begin(), survivors.end(),
      [](const ScoredCandidate& a, const ScoredCandidate& b) {
        if (a.norm_edit != b.norm_edit) return a.norm_edit < b.norm_edit;
        if (a.cosine_score != b.cosine_score) {
          return a.cosine_score > b.cosine_score;
        }
        const std::size_t alen = a.candidate.token_end - a.candidate.token_start;
        const std::size_t blen = b.candidate.token_end - b.candidate.token_start;
        if (alen != blen) return alen > blen;
        if (a.candidate.token_start != b.candidate.token_start) {
          return a.candidate.token_start < b.candidate.token_start;
        }
        return a.entry_index < b.entry_index;
      });

  std::vector<Match> accepted;
  for (const ScoredCandidate& sc : survivors) {
    const bool overlaps = std::any_of(
        accepted.begin(), accepted.end(), [&](const Match& m) {
          return detail::token_spans_overlap(m.token_start, m.token_end,
                                             sc.candidate.token_start,
                                             sc.candidate.token_end);
        });
    if (overlaps) continue;
    Match m;
    m.idiom_id = sc.idiom_id;
    m.entry_index = sc.entry_index;
    m.polarity = lexicon.entry(sc.entry_index).polarity;
    m.token_start = sc.candidate.token_start;
    m.token_end = sc.candidate.token_end;
    m.char_start = sc.candidate.char_start;
    m.char_end = sc.candidate.char_end;
    m.cosine_score = sc.cosine_score;
    m.norm_edit = sc.norm_edit;
    accepted.push_back(std::move(m));
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Match& a, const Match& b) {
              return a.char_start < b.char_start;
            });
  return accepted;
}

inline std::vector<Match> detect(std::string_view text, const Lexicon& lexicon,
                                 const DetectorConfig& config = {}) {
  return detect(tokenize(text), lexicon, config);
}

}  // namespace mathal

#endif  // MATHAL_DETECTOR_HPP

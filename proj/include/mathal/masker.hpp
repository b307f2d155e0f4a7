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

#ifndef MATHAL_MASKER_HPP
#define MATHAL_MASKER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mathal/detector.hpp"
#include "mathal/lexicon.hpp"
#include "mathal/unicode.hpp"

namespace mathal {

// Downstream classifiers key on these exact literals; never vary them.
inline constexpr std::string_view kNegativeMask = "NG_Phrase";
inline constexpr std::string_view kPositiveMask = "PO_Phrase";

inline constexpr std::string_view mask_token(Polarity p) {
  return p == Polarity::kPositive ? kPositiveMask : kNegativeMask;
}

/// One substitution performed by mask(). The char span addresses the
/// ORIGINAL text in Unicode scalar offsets; `original` keeps the replaced
/// slice so the substitution is invertible.
struct Replacement {
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::string mask;
  std::string original;
  std::string idiom_id;
  Polarity polarity = Polarity::kNegative;

  bool operator==(const Replacement&) const = default;
};

struct MaskedDocument {
  std::string masked_text;
  std::vector<Replacement> replacements;  // ascending char_start
};

/// Replaces each match's span with its polarity mask. Spans must be
/// in bounds, non-empty, and pairwise disjoint (what detect returns);
/// anything else throws std::invalid_argument. Substitution runs right to
/// left so earlier offsets stay valid while splicing.
inline MaskedDocument mask(std::string_view text,
                           const std::vector<Match>& matches) {
  std::u32string cps = unicode::decode_utf8(text);

  std::vector<const Match*> ordered;
  ordered.reserve(matches.size());
  for (const Match& m : matches) ordered.push_back(&m);
  std::sort(ordered.begin(), ordered.end(),
            [](const Match* a, const Match* b) {
              return a->char_start < b->char_start;
            });
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Match& m = *ordered[i];
    if (m.char_start >= m.char_end || m.char_end > cps.size()) {
      throw std::invalid_argument("match span out of bounds");
    }
    if (i > 0 && ordered[i - 1]->char_end > m.char_start) {
      throw std::invalid_argument("match spans overlap");
    }
  }

  MaskedDocument doc;
  for (const Match* m : ordered) {
    Replacement r;
    r.char_start = m->char_start;
    r.char_end = m->char_end;
    r.mask = std::string(mask_token(m->polarity));
    r.original = unicode::encode_utf8(
        std::u32string_view(cps).substr(m->char_start,
                                        m->char_end - m->char_start));
    r.idiom_id = m->idiom_id;
    r.polarity = m->polarity;
    doc.replacements.push_back(std::move(r));
  }

  for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
    const Match& m = **it;
    std::u32string mask_cps;
    for (char c : mask_token(m.polarity)) {
      mask_cps.push_back(static_cast<char32_t>(c));
    }
    cps.replace(m.char_start, m.char_end - m.char_start, mask_cps);
  }
  doc.masked_text = unicode::encode_utf8(cps);
  return doc;
}

/// Reconstructs the source text by splicing each stored original back
/// over its mask. Throws std::invalid_argument when the document's
/// replacement log is inconsistent with its masked text.
inline std::string unmask(const MaskedDocument& doc) {
  const std::u32string masked = unicode::decode_utf8(doc.masked_text);
  std::u32string out;
  std::size_t orig_pos = 0;    // position in the original text
  std::size_t masked_pos = 0;  // position in masked_text
  for (const Replacement& r : doc.replacements) {
    if (r.char_start < orig_pos) {
      throw std::invalid_argument("replacement log is not ascending");
    }
    const std::size_t gap = r.char_start - orig_pos;
    if (masked_pos + gap + r.mask.size() > masked.size()) {
      throw std::invalid_argument("replacement log overruns masked text");
    }
    out.append(masked, masked_pos, gap);
    masked_pos += gap;
    const std::u32string mask_here =
        std::u32string(masked, masked_pos, r.mask.size());
    if (unicode::encode_utf8(mask_here) != r.mask) {
      throw std::invalid_argument("mask token missing at recorded position");
    }
    masked_pos += r.mask.size();
    out += unicode::decode_utf8(r.original);
    orig_pos = r.char_end;
  }
  out.append(masked, masked_pos, masked.size() - masked_pos);
  return unicode::encode_utf8(out);
}

enum class SentimentLabel { kPositive, kNegative, kNeutral };

inline constexpr std::string_view sentiment_label_tag(SentimentLabel l) {
  switch (l) {
    case SentimentLabel::kPositive: return "PO";
    case SentimentLabel::kNegative: return "NG";
    default: return "NEUTRAL";
  }
}

/// Net document polarity: sign of the summed contributions.
struct SentimentScore {
  int net = 0;
  SentimentLabel label = SentimentLabel::kNeutral;
};

/// Each match contributes +idiom_weight (PO) or -idiom_weight (NG);
/// extra_terms lets a caller mix in unit-range word scores from an
/// external sentiment lexicon without this library shipping one.
/// idiom_weight must lie in [1, 3] and every extra term in [-1, 1].
inline SentimentScore score(const std::vector<Match>& matches,
                            int idiom_weight = 3,
                            const std::vector<int>& extra_terms = {}) {
  if (idiom_weight < 1 || idiom_weight > 3) {
    throw std::invalid_argument("idiom_weight must be in [1, 3]");
  }
  SentimentScore result;
  for (const Match& m : matches) {
    result.net += m.polarity == Polarity::kPositive ? idiom_weight
                                                    : -idiom_weight;
  }
  for (int term : extra_terms) {
    if (term < -1 || term > 1) {
      throw std::invalid_argument("extra term weights must be in [-1, 1]");
    }
    result.net += term;
  }
  result.label = result.net > 0   ? SentimentLabel::kPositive
                 : result.net < 0 ? SentimentLabel::kNegative
                                  : SentimentLabel::kNeutral;
  return result;
}

}  // namespace mathal

#endif  // MATHAL_MASKER_HPP

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

#ifndef MATHAL_NORMALIZE_HPP
#define MATHAL_NORMALIZE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mathal/unicode.hpp"

namespace mathal {

namespace arabic {

inline constexpr char32_t kHamza = 0x0621;
inline constexpr char32_t kAlefMadda = 0x0622;
inline constexpr char32_t kAlefHamzaAbove = 0x0623;
inline constexpr char32_t kWawHamza = 0x0624;
inline constexpr char32_t kAlefHamzaBelow = 0x0625;
inline constexpr char32_t kYehHamza = 0x0626;
inline constexpr char32_t kAlef = 0x0627;
inline constexpr char32_t kTehMarbuta = 0x0629;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kAlefMaksura = 0x0649;
inline constexpr char32_t kYeh = 0x064A;
inline constexpr char32_t kHeh = 0x0647;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kMaddaAbove = 0x0653;
inline constexpr char32_t kHamzaAbove = 0x0654;
inline constexpr char32_t kHamzaBelow = 0x0655;

// Fathatan (U+064B) through sukun (U+0652).
inline constexpr bool is_haraka(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

/// Precomposed form of base + combining mark, or 0 when the pair has no
/// canonical composition. Covers the Arabic-script canonical pairs.
inline constexpr char32_t compose(char32_t base, char32_t mark) {
  if (mark == kMaddaAbove && base == kAlef) return kAlefMadda;
  if (mark == kHamzaAbove) {
    if (base == kAlef) return kAlefHamzaAbove;
    if (base == kWaw) return kWawHamza;
    if (base == kYeh) return kYehHamza;
  }
  if (mark == kHamzaBelow && base == kAlef) return kAlefHamzaBelow;
  return 0;
}

}  // namespace arabic

/// Knobs for the character normalization shared by lexicon and detector.
struct NormalizeOptions {
  // Folding teh marbuta breaks Buckwalter round trips, so it is off unless
  // a caller opts in for dialect-heavy inputs.
  bool fold_teh_marbuta = false;
};

/// Character normalization, applied in order: Arabic canonical
/// (de)composition, tatweel + haraka removal, alef-variant unification,
/// alef maksura -> yeh, whitespace collapse + trim. Idempotent.
inline std::u32string normalize(std::u32string_view text,
                                const NormalizeOptions& opts = {}) {
  std::u32string work(text);
  // Composition and unification interact (unifying can expose a new
  // composable pair under stacked marks), so repeat until stable.
  for (;;) {
    std::u32string pass;
    pass.reserve(work.size());
    for (char32_t cp : work) {
      if (cp == arabic::kTatweel || arabic::is_haraka(cp)) continue;
      if (!pass.empty()) {
        if (char32_t composed = arabic::compose(pass.back(), cp)) {
          pass.back() = composed;
          continue;
        }
      }
      pass.push_back(cp);
    }
    for (char32_t& cp : pass) {
      if (cp == arabic::kAlefMadda || cp == arabic::kAlefHamzaAbove ||
          cp == arabic::kAlefHamzaBelow) {
        cp = arabic::kAlef;
      } else if (cp == arabic::kAlefMaksura) {
        cp = arabic::kYeh;
      } else if (opts.fold_teh_marbuta && cp == arabic::kTehMarbuta) {
        cp = arabic::kHeh;
      }
    }
    if (pass == work) break;
    work = std::move(pass);
  }

  std::u32string out;
  out.reserve(work.size());
  for (char32_t cp : work) {
    if (unicode::is_space(cp)) {
      if (!out.empty() && out.back() != U' ') out.push_back(U' ');
    } else {
      out.push_back(cp);
    }
  }
  if (!out.empty() && out.back() == U' ') out.pop_back();
  return out;
}

inline std::string normalize(std::string_view text,
                             const NormalizeOptions& opts = {}) {
  return unicode::encode_utf8(normalize(unicode::decode_utf8(text), opts));
}

/// One whitespace/punctuation-free unit of the input. `text` is the
/// normalized form; the span is in Unicode scalar offsets into the
/// original string (half-open).
struct Token {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool operator==(const Token&) const = default;
};

struct TokenizedText {
  std::string original;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

/// Splits on whitespace and punctuation/symbols (delimiters are dropped,
/// never emitted as tokens). Tokens whose normalized text comes out empty
/// (pure diacritics, tatweel runs) are dropped too.
inline TokenizedText tokenize(std::string_view text,
                              const NormalizeOptions& opts = {}) {
  TokenizedText out;
  out.original.assign(text.data(), text.size());
  const std::u32string cps = unicode::decode_utf8(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (unicode::is_delimiter(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < cps.size() && !unicode::is_delimiter(cps[i])) ++i;
    std::u32string norm =
        normalize(std::u32string_view(cps).substr(start, i - start), opts);
    if (norm.empty()) continue;
    out.tokens.push_back(
        Token{unicode::encode_utf8(norm), start, i});
  }
  return out;
}

/// Space-joined normalized token texts for the half-open token range
/// [first, last). This is the string edit distance operates on.
inline std::string join_tokens(const TokenizedText& text, std::size_t first,
                               std::size_t last) {
  std::string out;
  for (std::size_t k = first; k < last; ++k) {
    if (k > first) out.push_back(' ');
    out += text.tokens[k].text;
  }
  return out;
}

}  // namespace mathal

#endif  // MATHAL_NORMALIZE_HPP

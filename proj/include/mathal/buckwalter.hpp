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

#ifndef MATHAL_BUCKWALTER_HPP
#define MATHAL_BUCKWALTER_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mathal/unicode.hpp"

namespace mathal::buckwalter {

/// Raised on a character neither in the transliteration table nor in the
/// pass-through set. `offset()` is the index of the offender: Unicode
/// scalar offset going Arabic -> ASCII, byte offset going ASCII -> Arabic.
class TransliterationError : public std::runtime_error {
 public:
  TransliterationError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

// Original (non-XML-safe) Buckwalter letters and diacritics, indexed by
// code point minus U+0621. 0 marks a gap (U+063B..U+0640; tatweel is
// deliberately unmapped: it is noise the normalizer strips, and mapping it
// to '_' would make '_' ambiguous with out-of-alphabet input).
inline constexpr std::array<char, 50> kArabicToAscii = {
    '\'', '|', '>', '&', '<', '}', 'A', 'b', 'p', 't',  // 0621-062A
    'v',  'j', 'H', 'x', 'd', '*', 'r', 'z', 's', '$',  // 062B-0634
    'S',  'D', 'T', 'Z', 'E', 'g', 0,   0,   0,   0,    // 0635-063E
    0,    0,   'f', 'q', 'k', 'l', 'm', 'n', 'h', 'w',  // 063F-0648
    'Y',  'y', 'F', 'N', 'K', 'a', 'u', 'i', '~', 'o',  // 0649-0652
};

inline constexpr char arabic_to_ascii(char32_t cp) {
  if (cp < 0x0621 || cp > 0x0652) return 0;
  return kArabicToAscii[cp - 0x0621];
}

inline constexpr char32_t ascii_to_arabic(char c) {
  for (std::size_t i = 0; i < kArabicToAscii.size(); ++i) {
    if (kArabicToAscii[i] != 0 && kArabicToAscii[i] == c) {
      return static_cast<char32_t>(0x0621 + i);
    }
  }
  return 0;
}

// Characters carried through unchanged in both directions: whitespace,
// ASCII digits, and punctuation that no Buckwalter symbol claims.
inline constexpr bool is_passthrough(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r':
    case U'.': case U',': case U'!': case U'?': case U':': case U';':
    case U'(': case U')': case U'-': case U'"': case U'/': case U'%':
    case U'+': case U'=': case U'#':
      return true;
    default:
      return cp >= U'0' && cp <= U'9';
  }
}

inline std::string codepoint_name(char32_t cp) {
  static const char* hex = "0123456789ABCDEF";
  std::string out = "U+";
  int digits = cp > 0xFFFF ? 6 : 4;
  for (int shift = (digits - 1) * 4; shift >= 0; shift -= 4) {
    out.push_back(hex[(cp >> shift) & 0xF]);
  }
  return out;
}

}  // namespace detail

/// Arabic text to its Buckwalter romanization, one ASCII char per code
/// point; whitespace, digits, and neutral punctuation pass through.
/// Throws TransliterationError on anything else.
inline std::string to_buckwalter(std::u32string_view arabic) {
  std::string out;
  out.reserve(arabic.size());
  for (std::size_t i = 0; i < arabic.size(); ++i) {
    const char32_t cp = arabic[i];
    if (char mapped = detail::arabic_to_ascii(cp)) {
      out.push_back(mapped);
    } else if (detail::is_passthrough(cp)) {
      out.push_back(static_cast<char>(cp));
    } else {
      throw TransliterationError("untransliterable character " +
                                     detail::codepoint_name(cp) +
                                     " at offset " + std::to_string(i),
                                 i);
    }
  }
  return out;
}

inline std::string to_buckwalter(std::string_view arabic_utf8) {
  return to_buckwalter(unicode::decode_utf8(arabic_utf8));
}

/// Inverse of to_buckwalter: Buckwalter ASCII back to Arabic UTF-8.
/// Throws TransliterationError on any byte outside the table and the
/// pass-through set (including all non-ASCII bytes).
inline std::string from_buckwalter(std::string_view bw) {
  std::string out;
  out.reserve(bw.size() * 2);
  for (std::size_t i = 0; i < bw.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(bw[i]);
    if (c < 0x80) {
      if (char32_t cp = detail::ascii_to_arabic(static_cast<char>(c))) {
        unicode::append_utf8(out, cp);
        continue;
      }
      if (detail::is_passthrough(c)) {
        out.push_back(static_cast<char>(c));
        continue;
      }
    }
    std::string shown = c >= 0x20 && c < 0x7F
                            ? std::string(1, static_cast<char>(c))
                            : detail::codepoint_name(c);
    throw TransliterationError("unknown transliteration symbol '" + shown +
                                   "' at offset " + std::to_string(i),
                               i);
  }
  return out;
}

}  // namespace mathal::buckwalter

#endif  // MATHAL_BUCKWALTER_HPP

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

#ifndef MATHAL_UNICODE_HPP
#define MATHAL_UNICODE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mathal::unicode {

/// Thrown on malformed UTF-8. Offsets are byte positions into the input.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(std::string message, std::size_t byte_offset)
      : std::runtime_error(std::move(message)), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Strict UTF-8 decoder: rejects truncated sequences, overlong encodings,
/// surrogates, and code points above U+10FFFF.
inline std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](const char* what, std::size_t at) {
    throw Utf8Error(std::string("invalid UTF-8: ") + what + " at byte " +
                        std::to_string(at),
                    at);
  };
  while (i < bytes.size()) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07u;
    } else {
      fail("bad leading byte", i);
      return out;  // unreachable
    }
    if (i + len > bytes.size()) fail("truncated sequence", i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) fail("bad continuation byte", i + k);
      cp = (cp << 6) | (bk & 0x3Fu);
    }
    static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMinForLen[len]) fail("overlong encoding", i);
    if (cp >= 0xD800 && cp <= 0xDFFF) fail("surrogate code point", i);
    if (cp > 0x10FFFF) fail("code point out of range", i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

inline bool is_space(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x0085:  // NEL
    case 0x00A0:  // NBSP
    case 0x1680:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;  // EN QUAD .. HAIR SPACE
  }
}

/// Token delimiters beyond whitespace: punctuation and symbol ranges that
/// show up in microblog text (ASCII and Latin-1 punctuation, general
/// punctuation incl. the zero-width/bidi controls, Arabic punctuation,
/// currency/arrows/math/misc symbols, emoji planes).
inline bool is_punctuation_or_symbol(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  if (cp >= 0xA1 && cp <= 0xBF) return true;  // Latin-1 punctuation/symbols
  if (cp == 0x00D7 || cp == 0x00F7) return true;
  switch (cp) {
    case 0x060C:  // Arabic comma
    case 0x060D:
    case 0x061B:  // Arabic semicolon
    case 0x061E:
    case 0x061F:  // Arabic question mark
    case 0x066A:  // Arabic percent
    case 0x066B:
    case 0x066C:
    case 0x066D:  // Arabic five pointed star
    case 0x06D4:  // Arabic full stop
    case 0xFEFF:  // BOM / zero width no-break space
      return true;
    default:
      break;
  }
  if (cp >= 0x2000 && cp <= 0x206F) return true;  // general punctuation
  if (cp >= 0x20A0 && cp <= 0x20CF) return true;  // currency symbols
  if (cp >= 0x2100 && cp <= 0x2BFF) return true;  // letterlike..misc symbols
  if (cp >= 0x2E00 && cp <= 0x2E7F) return true;
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  if (cp >= 0xFE00 && cp <= 0xFE0F) return true;  // variation selectors
  if (cp >= 0xFE30 && cp <= 0xFE4F) return true;
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;  // fullwidth punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return true;
  if (cp >= 0xFF3B && cp <= 0xFF40) return true;
  if (cp >= 0xFF5B && cp <= 0xFF65) return true;
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return true;  // emoji & pictographs
  return false;
}

inline bool is_delimiter(char32_t cp) {
  return is_space(cp) || is_punctuation_or_symbol(cp);
}

}  // namespace mathal::unicode

#endif  // MATHAL_UNICODE_HPP

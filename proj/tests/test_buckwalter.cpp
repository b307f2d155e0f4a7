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

#include "mathal/buckwalter.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "mathal/unicode.hpp"
#include "oracles.hpp"

namespace bw = mathal::buckwalter;

TEST(Buckwalter, KnownPhrases) {
  EXPECT_EQ(bw::to_buckwalter("حكم قراقوش"), "Hkm qrAqw$");
  EXPECT_EQ(bw::to_buckwalter("عشم إبليس بالجنة"), "E$m <blys bAljnp");
  EXPECT_EQ(bw::to_buckwalter("الأطرش في الزفة"), "Al>Tr$ fy Alzfp");
  EXPECT_EQ(bw::to_buckwalter("الي فات مات"), "Aly fAt mAt");
  EXPECT_EQ(bw::to_buckwalter(""), "");
}

TEST(Buckwalter, DecodesKnownPhrases) {
  EXPECT_EQ(bw::from_buckwalter("Hkm qrAqw$"), "حكم قراقوش");
  EXPECT_EQ(bw::from_buckwalter("yArythA jAbt rAjl"), "ياريتها جابت راجل");
  EXPECT_EQ(bw::from_buckwalter(""), "");
}

TEST(Buckwalter, HamzaFormsAreDistinct) {
  EXPECT_EQ(bw::to_buckwalter("ء"), "'");
  EXPECT_EQ(bw::to_buckwalter("آ"), "|");
  EXPECT_EQ(bw::to_buckwalter("أ"), ">");
  EXPECT_EQ(bw::to_buckwalter("ؤ"), "&");
  EXPECT_EQ(bw::to_buckwalter("إ"), "<");
  EXPECT_EQ(bw::to_buckwalter("ئ"), "}");
}

TEST(Buckwalter, DiacriticsMap) {
  // fatha, damma, kasra, shadda, sukun on-letter forms.
  EXPECT_EQ(bw::to_buckwalter("بَ بُ بِ بّ بْ"), "ba bu bi b~ bo");
  // tanween forms.
  EXPECT_EQ(bw::to_buckwalter("بً بٌ بٍ"), "bF bN bK");
}

TEST(Buckwalter, DigitsAndPunctuationPassThrough) {
  // Latin letters are reserved for the romanized side, so the shared
  // passthrough set is only whitespace, digits, and plain punctuation.
  EXPECT_EQ(bw::to_buckwalter("123 (5+7)=12, 50%?"), "123 (5+7)=12, 50%?");
  EXPECT_EQ(bw::from_buckwalter("123 (5+7)=12, 50%?"), "123 (5+7)=12, 50%?");
  EXPECT_THROW(bw::to_buckwalter("ok"), bw::TransliterationError);
}

TEST(Buckwalter, UnknownArabicSideCharacterNamesOffset) {
  // Tatweel is deliberately outside the table.
  try {
    bw::to_buckwalter("حكـم");
    FAIL() << "expected TransliterationError";
  } catch (const bw::TransliterationError& e) {
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_NE(std::string(e.what()).find("U+0640"), std::string::npos);
  }
}

TEST(Buckwalter, UnknownAsciiSideSymbolNamesOffset) {
  try {
    bw::from_buckwalter("Hkm_qrAqw");
    FAIL() << "expected TransliterationError";
  } catch (const bw::TransliterationError& e) {
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_NE(std::string(e.what()).find("'_'"), std::string::npos);
  }
}

TEST(Buckwalter, RejectsNonAsciiOnAsciiSide) {
  EXPECT_THROW(bw::from_buckwalter("Hkم"), bw::TransliterationError);
}

TEST(Buckwalter, RoundTripsTenThousandRandomStrings) {
  std::mt19937 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const std::u32string s = oracles::random_transliterable(rng, 30);
    const std::string utf8 = mathal::unicode::encode_utf8(s);
    const std::string ascii = bw::to_buckwalter(utf8);
    EXPECT_EQ(bw::from_buckwalter(ascii), utf8) << "round " << i;
    for (char c : ascii) {
      ASSERT_GE(static_cast<unsigned char>(c), 0x20u);
      ASSERT_LT(static_cast<unsigned char>(c), 0x80u);
    }
  }
}

TEST(Buckwalter, InverseOnAsciiImage) {
  // from -> to is also the identity on transliterated output.
  std::mt19937 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const std::string ascii = bw::to_buckwalter(
        mathal::unicode::encode_utf8(oracles::random_transliterable(rng, 20)));
    EXPECT_EQ(bw::to_buckwalter(bw::from_buckwalter(ascii)), ascii);
  }
}

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

#ifndef MATHAL_LEXICON_HPP
#define MATHAL_LEXICON_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathal/buckwalter.hpp"
#include "mathal/normalize.hpp"
#include "mathal/unicode.hpp"

namespace mathal {

/// Sentiment orientation of an idiom. Exactly two values; the lexicon
/// format spells them "PO" and "NG".
enum class Polarity { kPositive, kNegative };

inline constexpr std::string_view polarity_tag(Polarity p) {
  return p == Polarity::kPositive ? "PO" : "NG";
}

inline Polarity parse_polarity(std::string_view tag) {
  if (tag == "PO") return Polarity::kPositive;
  if (tag == "NG") return Polarity::kNegative;
  throw std::invalid_argument("unknown polarity tag \"" + std::string(tag) +
                              "\" (expected PO or NG)");
}

/// One lexicon row. `tokens` and `normalized_surface` are derived from
/// `surface` when the entry enters a Lexicon; they are what matching
/// compares against.
struct IdiomEntry {
  std::string id;
  std::string surface;
  std::string gloss;
  std::string buckwalter;
  Polarity polarity = Polarity::kNegative;

  std::vector<std::string> tokens;
  std::string normalized_surface;
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable idiom collection with an inverted term index. Safe for
/// unsynchronized concurrent reads once constructed.
class Lexicon {
 public:
  Lexicon() = default;

  /// Takes ownership of the entries, recomputes their derived token
  /// fields, and builds the term index. Throws std::invalid_argument on
  /// duplicate ids.
  explicit Lexicon(std::vector<IdiomEntry> entries)
      : entries_(std::move(entries)) {
    std::set<std::string_view> seen_ids;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      IdiomEntry& e = entries_[i];
      if (!seen_ids.insert(e.id).second) {
        throw std::invalid_argument("duplicate lexicon entry id \"" + e.id +
                                    "\"");
      }
      TokenizedText tokenized = tokenize(e.surface);
      e.tokens.clear();
      for (const Token& t : tokenized.tokens) e.tokens.push_back(t.text);
      e.normalized_surface = join_tokens(tokenized, 0, tokenized.size());
      for (const std::string& term : e.tokens) {
        std::vector<std::size_t>& postings = index_[term];
        if (postings.empty() || postings.back() != i) postings.push_back(i);
      }
    }
  }

  const std::vector<IdiomEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const IdiomEntry& entry(std::size_t i) const { return entries_.at(i); }

  const IdiomEntry* find_by_id(std::string_view id) const {
    for (const IdiomEntry& e : entries_) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  /// Indices of entries containing `term` among their normalized tokens,
  /// ascending. Empty vector when the term is unknown.
  const std::vector<std::size_t>& entries_with_term(
      const std::string& term) const {
    static const std::vector<std::size_t> kNone;
    auto it = index_.find(term);
    return it == index_.end() ? kNone : it->second;
  }

  const std::map<std::string, std::vector<std::size_t>>& index() const {
    return index_;
  }

 private:
  std::vector<IdiomEntry> entries_;
  std::map<std::string, std::vector<std::size_t>> index_;
};

/// A rejected input row: 1-based line number plus the reason.
struct LoadIssue {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  Lexicon lexicon;
  std::vector<LoadIssue> issues;
};

namespace detail {

inline std::string trim_field(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  auto blank = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (b < e && blank(s[b])) ++b;
  while (e > b && blank(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Parses the 4-column TSV lexicon format: surface, gloss, Buckwalter,
/// polarity. Lines starting with '#' and blank lines are skipped. Rows
/// that fail to parse are collected as issues, not fatal. Throws
/// LexiconError when the stream is unreadable, the text is not UTF-8, or
/// no row survives; a lexicon with zero entries is useless downstream.
inline LoadResult load_lexicon(std::istream& in) {
  LoadResult result;
  std::vector<IdiomEntry> accepted;
  std::set<std::string> seen_surfaces;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    try {
      unicode::decode_utf8(line);
    } catch (const unicode::Utf8Error& e) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": malformed UTF-8 at byte " +
                         std::to_string(e.byte_offset()));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 4) {
      result.issues.push_back(
          {line_no, "expected 4 tab-separated columns, got " +
                        std::to_string(fields.size())});
      continue;
    }

    IdiomEntry entry;
    entry.surface = detail::trim_field(fields[0]);
    entry.gloss = detail::trim_field(fields[1]);
    entry.buckwalter = detail::trim_field(fields[2]);
    const std::string polarity_field = detail::trim_field(fields[3]);
    try {
      entry.polarity = parse_polarity(polarity_field);
    } catch (const std::invalid_argument& e) {
      result.issues.push_back({line_no, e.what()});
      continue;
    }

    TokenizedText tokenized = tokenize(entry.surface);
    if (tokenized.empty()) {
      result.issues.push_back(
          {line_no, "surface is empty after normalization"});
      continue;
    }
    const std::string normalized =
        join_tokens(tokenized, 0, tokenized.size());
    if (!seen_surfaces.insert(normalized).second) {
      result.issues.push_back(
          {line_no,
           "duplicate surface \"" + entry.surface + "\" (first row wins)"});
      continue;
    }
    entry.id = "idiom-" + std::to_string(accepted.size() + 1);
    accepted.push_back(std::move(entry));
  }
  if (in.bad()) throw LexiconError("lexicon stream read failure");
  if (accepted.empty()) throw LexiconError("zero valid lexicon rows");
  result.lexicon = Lexicon(std::move(accepted));
  return result;
}

inline LoadResult load_lexicon(std::string_view tsv_text) {
  std::istringstream in{std::string(tsv_text)};
  return load_lexicon(in);
}

inline LoadResult load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file: " + path);
  return load_lexicon(in);
}

/// Inverse of load_lexicon for persistence round trips: 4-column TSV,
/// one row per entry, in entry order.
inline std::string to_tsv(const Lexicon& lex) {
  std::string out =
      "# surface\tgloss\tbuckwalter\tpolarity\n";
  for (const IdiomEntry& e : lex.entries()) {
    out += e.surface;
    out.push_back('\t');
    out += e.gloss;
    out.push_back('\t');
    out += e.buckwalter;
    out.push_back('\t');
    out += polarity_tag(e.polarity);
    out.push_back('\n');
  }
  return out;
}

enum class IssueSeverity { kWarning, kError };

struct ValidationIssue {
  IssueSeverity severity = IssueSeverity::kWarning;
  std::string entry_id;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool has_errors() const {
    return std::any_of(issues.begin(), issues.end(), [](const auto& i) {
      return i.severity == IssueSeverity::kError;
    });
  }

  std::string to_text() const {
    if (issues.empty()) return "lexicon OK\n";
    std::string out;
    for (const ValidationIssue& i : issues) {
      out += i.severity == IssueSeverity::kError ? "error" : "warning";
      out += " [";
      out += i.entry_id;
      out += "]: ";
      out += i.message;
      out.push_back('\n');
    }
    return out;
  }
};

/// Cross-checks every entry: token count must fit the 2..6 matching
/// window (error; such entries can never be matched), the Buckwalter
/// field must round-trip to the normalized surface (warning; source data
/// is often inconsistent), and normalized surfaces must be unique
/// (error).
inline ValidationReport validate_lexicon(const Lexicon& lex) {
  ValidationReport report;
  std::map<std::string, std::string> surface_owner;
  for (const IdiomEntry& e : lex.entries()) {
    const std::size_t n = e.tokens.size();
    if (n < 2 || n > 6) {
      report.issues.push_back(
          {IssueSeverity::kError, e.id,
           "surface has " + std::to_string(n) +
               " token(s); matchable range is 2..6"});
    }
    try {
      const std::string back =
          normalize(buckwalter::from_buckwalter(e.buckwalter));
      if (back != e.normalized_surface) {
        report.issues.push_back(
            {IssueSeverity::kWarning, e.id,
             "buckwalter \"" + e.buckwalter +
                 "\" back-transliterates to \"" + back +
                 "\", not the normalized surface \"" + e.normalized_surface +
                 "\""});
      }
    } catch (const buckwalter::TransliterationError& err) {
      report.issues.push_back(
          {IssueSeverity::kWarning, e.id,
           "buckwalter \"" + e.buckwalter +
               "\" is not decodable: " + err.what()});
    }
    auto [it, inserted] = surface_owner.emplace(e.normalized_surface, e.id);
    if (!inserted) {
      report.issues.push_back(
          {IssueSeverity::kError, e.id,
           "duplicate normalized surface (already used by " + it->second +
               ")"});
    }
  }
  return report;
}

}  // namespace mathal

#endif  // MATHAL_LEXICON_HPP

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

#ifndef MATHAL_SIMILARITY_HPP
#define MATHAL_SIMILARITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mathal/unicode.hpp"

namespace mathal {

/// What counts as a "term" when building frequency vectors: whole word
/// tokens, or the individual characters of the space-joined phrase
/// (spaces excluded).
enum class VectorMode { kWordTf, kCharTf };

/// Sparse term-frequency vector with a cached Euclidean norm.
/// Weights are integer-valued counts stored as doubles; zero-weight terms
/// are never stored.
class TermVector {
 public:
  TermVector() = default;

  explicit TermVector(std::map<std::string, double> weights)
      : weights_(std::move(weights)) {
    for (auto it = weights_.begin(); it != weights_.end();) {
      it = it->second == 0.0 ? weights_.erase(it) : std::next(it);
    }
    for (const auto& [term, w] : weights_) norm_sq_ += w * w;
  }

  const std::map<std::string, double>& weights() const { return weights_; }
  bool empty() const { return weights_.empty(); }
  double norm_squared() const { return norm_sq_; }
  double norm() const { return std::sqrt(norm_sq_); }

  /// Sparse dot product (iterates the smaller operand).
  double dot(const TermVector& other) const {
    const TermVector* small = this;
    const TermVector* large = &other;
    if (small->weights_.size() > large->weights_.size()) {
      std::swap(small, large);
    }
    double sum = 0.0;
    for (const auto& [term, w] : small->weights_) {
      auto it = large->weights_.find(term);
      if (it != large->weights_.end()) sum += w * it->second;
    }
    return sum;
  }

 private:
  std::map<std::string, double> weights_;
  double norm_sq_ = 0.0;
};

/// Builds a TermVector from normalized token texts. kCharTf counts every
/// Unicode scalar of every token (equivalent to the space-joined phrase
/// minus the spaces).
template <typename Iter>
TermVector vectorize(Iter first, Iter last,
                     VectorMode mode = VectorMode::kWordTf) {
  std::map<std::string, double> weights;
  for (Iter it = first; it != last; ++it) {
    const std::string_view token{*it};
    if (mode == VectorMode::kWordTf) {
      weights[std::string(token)] += 1.0;
    } else {
      for (char32_t cp : unicode::decode_utf8(token)) {
        std::string key;
        unicode::append_utf8(key, cp);
        weights[key] += 1.0;
      }
    }
  }
  return TermVector(std::move(weights));
}

inline TermVector vectorize(const std::vector<std::string>& tokens,
                            VectorMode mode = VectorMode::kWordTf) {
  return vectorize(tokens.begin(), tokens.end(), mode);
}

/// Cosine similarity in [0, 1]. Either operand having norm 0 yields 0.0
/// by convention (an empty phrase can never be similar to anything).
inline double cosine(const TermVector& a, const TermVector& b) {
  const double denom_sq = a.norm_squared() * b.norm_squared();
  if (denom_sq == 0.0) return 0.0;
  // sqrt of the product of the squared norms: for identical integer count
  // vectors the product is a perfect square, sqrt is exact, and the
  // quotient is exactly 1.0. Computing norm(a)*norm(b) separately loses
  // that.
  const double value = a.dot(b) / std::sqrt(denom_sq);
  return std::clamp(value, 0.0, 1.0);
}

/// Levenshtein distance: minimum single-character inserts, deletes, and
/// substitutions. Two-row dynamic program, O(|a|·|b|) time, O(min) space.
inline std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// UTF-8 convenience overload; distances are over Unicode scalars, not
/// bytes.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(unicode::decode_utf8(a), unicode::decode_utf8(b));
}

/// Edit distance divided by the longer length, in [0, 1]. Two empty
/// strings are defined as distance 0.
inline double normalized_levenshtein(std::u32string_view a,
                                     std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) /
         static_cast<double>(longest);
}

inline double normalized_levenshtein(std::string_view a, std::string_view b) {
  return normalized_levenshtein(unicode::decode_utf8(a),
                                unicode::decode_utf8(b));
}

}  // namespace mathal

#endif  // MATHAL_SIMILARITY_HPP

// Copyright 2026 The FacetForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FACETFORGE_NORMALIZE_H_
#define FACETFORGE_NORMALIZE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace facetforge {

struct NormalizationConfig {
  bool fold_case = true;
  // Drops a trailing "s" from tokens of at least four code points.
  bool fold_plurals = false;

  friend bool operator==(const NormalizationConfig&,
                         const NormalizationConfig&) = default;
};

// A normalized token. `start`/`end` are code point offsets into the original
// text (end exclusive); `byte_start`/`byte_end` are the matching UTF-8 byte
// offsets, kept so callers can slice the original surface cheaply.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits on maximal runs of non-alphanumeric code points, then applies NFC
// and the configured folds to each token. Combining marks stay attached to
// the word they follow. Malformed UTF-8 bytes act as separators.
std::vector<Token> normalize(std::string_view text,
                             const NormalizationConfig& config);

// Token texts only.
std::vector<std::string> normalize_words(std::string_view text,
                                         const NormalizationConfig& config);

// Canonical comparison key for a label: its default-config tokens joined by
// single spaces. Labels with no alphanumeric content key to themselves.
std::string label_key(std::string_view label);

// NFC plus full Unicode case folding; used for case-insensitive matching.
std::string case_fold(std::string_view text);

// Number of code points in a UTF-8 string (malformed bytes count as one).
std::size_t code_point_length(std::string_view text);

}  // namespace facetforge

#endif  // FACETFORGE_NORMALIZE_H_

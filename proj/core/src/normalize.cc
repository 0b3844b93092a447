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

#include "facetforge/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace facetforge {
namespace {

bool is_word_code_point(UChar32 c) {
  if (c < 0) return false;
  if (c < 0x80) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z');
  }
  return u_isalnum(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool is_ascii(std::string_view s) {
  for (unsigned char ch : s) {
    if (ch >= 0x80) return false;
  }
  return true;
}

const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
      throw std::runtime_error("ICU NFC normalizer unavailable");
    }
    return n;
  }();
  return *instance;
}

std::string fold_word(std::string_view word, const NormalizationConfig& config) {
  std::string out;
  if (is_ascii(word)) {
    out.assign(word);
    if (config.fold_case) {
      for (char& ch : out) {
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
      }
    }
  } else {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString us = icu::UnicodeString::fromUTF8(
        icu::StringPiece(word.data(), static_cast<int32_t>(word.size())));
    us = nfc().normalize(us, status);
    if (config.fold_case) {
      us.foldCase(U_FOLD_CASE_DEFAULT);
      us = nfc().normalize(us, status);
    }
    if (U_FAILURE(status)) {
      throw std::runtime_error("ICU normalization failed");
    }
    us.toUTF8String(out);
  }
  if (config.fold_plurals && !out.empty() &&
      (out.back() == 's' || out.back() == 'S') &&
      code_point_length(out) >= 4) {
    out.pop_back();
  }
  return out;
}

}  // namespace

std::vector<Token> normalize(std::string_view text,
                             const NormalizationConfig& config) {
  std::vector<Token> tokens;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t offset = 0;
  std::size_t code_point = 0;
  bool in_word = false;
  Token current;
  while (offset < length) {
    const int32_t byte_start = offset;
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    const bool word = is_word_code_point(c);
    if (word && !in_word) {
      current = Token{};
      current.start = code_point;
      current.byte_start = static_cast<std::size_t>(byte_start);
      in_word = true;
    } else if (!word && in_word) {
      current.end = code_point;
      current.byte_end = static_cast<std::size_t>(byte_start);
      tokens.push_back(std::move(current));
      in_word = false;
    }
    ++code_point;
  }
  if (in_word) {
    current.end = code_point;
    current.byte_end = text.size();
    tokens.push_back(std::move(current));
  }
  for (Token& token : tokens) {
    token.text = fold_word(
        text.substr(token.byte_start, token.byte_end - token.byte_start),
        config);
  }
  return tokens;
}

std::vector<std::string> normalize_words(std::string_view text,
                                         const NormalizationConfig& config) {
  std::vector<std::string> words;
  for (Token& token : normalize(text, config)) {
    words.push_back(std::move(token.text));
  }
  return words;
}

std::string label_key(std::string_view label) {
  std::string key;
  for (const std::string& word : normalize_words(label, {})) {
    if (!key.empty()) key += ' ';
    key += word;
  }
  if (key.empty()) key.assign(label);
  return key;
}

std::string case_fold(std::string_view text) {
  return fold_word(text, NormalizationConfig{});
}

std::size_t code_point_length(std::string_view text) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t offset = 0;
  std::size_t count = 0;
  while (offset < length) {
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    (void)c;
    ++count;
  }
  return count;
}

}  // namespace facetforge

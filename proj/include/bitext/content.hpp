// Copyright 2026 The Bitext Filter Authors.
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

// Per-record content filters: empty sides, length cap, symbols, glued
// keywords and numeric agreement.

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/types.hpp"

namespace bitext {

inline constexpr std::string_view kEmptyFilterName = "empty";
inline constexpr std::string_view kLengthFilterName = "length";
inline constexpr std::string_view kSymbolFilterName = "symbol";
inline constexpr std::string_view kKeywordFilterName = "keyword";
inline constexpr std::string_view kNumberFilterName = "number";

enum class KeywordMatch {
  // Keyword at end of line, right after a lowercase letter or a digit
  // ("TugasComment").
  kGlued,
  // Keyword at end of line, right after any letter or digit
  // ("TUGASComment" too).
  kGluedAnyCase,
};

struct ContentConfig {
  std::vector<std::string> keywords = {"Comment", "Name",  "GenericName",
                                       "Description", "Query", "Keywords"};
  KeywordMatch keyword_match = KeywordMatch::kGlued;
  std::vector<std::string> symbols = {"♪", "♫", "{", "}"};
  // Drop lines that are one parenthesized or bracketed span, e.g.
  // "(loud music playing)".
  bool drop_bracketed_lines = true;
  bool check_numbers = true;
  // Off by default: "03" and "3" are different digit runs.
  bool strip_leading_zeros = false;
  std::size_t max_chars = 500;
};

void validate(const ContentConfig& cfg);

Verdict empty_filter(const BitextRecord& record);
Verdict length_filter(const BitextRecord& record, const ContentConfig& cfg);
Verdict symbol_filter(const BitextRecord& record, const ContentConfig& cfg);
Verdict keyword_filter(const BitextRecord& record, const ContentConfig& cfg);
Verdict number_filter(const BitextRecord& record, const ContentConfig& cfg);

bool has_glued_keyword(std::string_view text, const ContentConfig& cfg);
bool is_bracketed_line(std::string_view text);

// Maximal runs of ASCII digits, sorted (a multiset).
std::vector<std::string> extract_numbers(std::string_view text,
                                         bool strip_leading_zeros = false);

// One entry per line; blank lines and lines starting with '#' are skipped.
// Surrounding whitespace is trimmed.
std::vector<std::string> load_list_file(const std::filesystem::path& path);

}  // namespace bitext

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

#include "bitext/content.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "bitext/io.hpp"
#include "bitext/text.hpp"

namespace bitext {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Code point ending right before byte offset `end`, or -1.
UChar32 code_point_before(std::string_view text, std::size_t end) {
  if (end == 0) return -1;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  auto offset = static_cast<int32_t>(end);
  UChar32 c;
  U8_PREV(bytes, 0, offset, c);
  return c;
}

bool glue_char(UChar32 c, KeywordMatch mode) {
  if (c < 0) return false;
  if (u_isdigit(c)) return true;
  return mode == KeywordMatch::kGlued ? u_islower(c) : u_isalpha(c);
}

bool any_side(const BitextRecord& r, auto&& pred) {
  return pred(r.src_text) || pred(r.tgt_text);
}

}  // namespace

void validate(const ContentConfig& cfg) {
  if (cfg.max_chars < 1) {
    throw BitextError(ErrorCode::kInvalidArgument, "max_chars must be >= 1");
  }
  for (const std::string& kw : cfg.keywords) {
    if (kw.empty()) {
      throw BitextError(ErrorCode::kInvalidArgument, "keywords must be nonempty");
    }
    const auto* bytes = reinterpret_cast<const uint8_t*>(kw.data());
    int32_t offset = 0;
    UChar32 first;
    U8_NEXT(bytes, offset, static_cast<int32_t>(kw.size()), first);
    if (first < 0 || !u_isupper(first)) {
      throw BitextError(ErrorCode::kInvalidArgument,
                        "keyword '" + kw + "' must begin with an uppercase letter");
    }
  }
  for (const std::string& sym : cfg.symbols) {
    if (sym.empty()) {
      throw BitextError(ErrorCode::kInvalidArgument, "symbols must be nonempty");
    }
  }
}

Verdict empty_filter(const BitextRecord& record) {
  if (any_side(record, [](const std::string& t) { return normalize_text(t).empty(); })) {
    return Verdict::remove(ReasonCode::kEmpty, kEmptyFilterName);
  }
  return Verdict::keep();
}

Verdict length_filter(const BitextRecord& record, const ContentConfig& cfg) {
  auto too_long = [&](const std::string& t) {
    // The normalized character count never exceeds the raw byte count.
    if (t.size() <= cfg.max_chars) return false;
    return char_count(normalize_text(t)) > cfg.max_chars;
  };
  if (any_side(record, too_long)) {
    return Verdict::remove(ReasonCode::kTooLong, kLengthFilterName);
  }
  return Verdict::keep();
}

bool is_bracketed_line(std::string_view text) {
  const std::string trimmed = normalize_text(text);
  if (trimmed.size() < 2) return false;
  const char open = trimmed.front();
  const char close = open == '(' ? ')' : open == '[' ? ']' : '\0';
  if (close == '\0' || trimmed.back() != close) return false;
  int depth = 0;
  for (std::size_t i = 0; i < trimmed.size(); ++i) {
    if (trimmed[i] == open) ++depth;
    if (trimmed[i] == close) --depth;
    // The opening bracket must only close at the very end.
    if (depth == 0 && i + 1 < trimmed.size()) return false;
  }
  return depth == 0;
}

Verdict symbol_filter(const BitextRecord& record, const ContentConfig& cfg) {
  auto has_symbol = [&](const std::string& t) {
    for (const std::string& sym : cfg.symbols) {
      if (t.find(sym) != std::string::npos) return true;
    }
    return cfg.drop_bracketed_lines && is_bracketed_line(t);
  };
  if (any_side(record, has_symbol)) {
    return Verdict::remove(ReasonCode::kSymbol, kSymbolFilterName);
  }
  return Verdict::keep();
}

bool has_glued_keyword(std::string_view text, const ContentConfig& cfg) {
  const std::string norm = normalize_text(text);
  const std::string_view line(norm);
  for (const std::string& kw : cfg.keywords) {
    if (!line.ends_with(kw)) continue;
    if (glue_char(code_point_before(line, line.size() - kw.size()), cfg.keyword_match)) {
      return true;
    }
  }
  return false;
}

Verdict keyword_filter(const BitextRecord& record, const ContentConfig& cfg) {
  if (any_side(record, [&](const std::string& t) { return has_glued_keyword(t, cfg); })) {
    return Verdict::remove(ReasonCode::kKeyword, kKeywordFilterName);
  }
  return Verdict::keep();
}

std::vector<std::string> extract_numbers(std::string_view text, bool strip_leading_zeros) {
  std::vector<std::string> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_digit(text[j])) ++j;
    std::string_view run = text.substr(i, j - i);
    if (strip_leading_zeros) {
      const auto nz = run.find_first_not_of('0');
      run = nz == std::string_view::npos ? run.substr(run.size() - 1) : run.substr(nz);
    }
    runs.emplace_back(run);
    i = j;
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

Verdict number_filter(const BitextRecord& record, const ContentConfig& cfg) {
  if (!cfg.check_numbers) return Verdict::keep();
  if (extract_numbers(record.src_text, cfg.strip_leading_zeros) !=
      extract_numbers(record.tgt_text, cfg.strip_leading_zeros)) {
    return Verdict::remove(ReasonCode::kNumberMismatch, kNumberFilterName);
  }
  return Verdict::keep();
}

std::vector<std::string> load_list_file(const std::filesystem::path& path) {
  std::vector<std::string> entries;
  for (const std::string& line : read_lines(path)) {
    std::string entry = normalize_text(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace bitext

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

#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include <bitset>

#include "bitext/langscript.hpp"

namespace bitext {
namespace {

bool is_letter(UChar32 c) { return (U_GET_GC_MASK(c) & U_GC_L_MASK) != 0; }

// Calls fn(script) for every letter whose script is a real script.
template <typename Fn>
void for_each_letter_script(std::string_view text, Fn&& fn) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t offset = 0;
  while (offset < length) {
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    if (c < 0) continue;
    if (c < 0x80) {
      if ((c | 0x20) >= 'a' && (c | 0x20) <= 'z') fn(USCRIPT_LATIN);
      continue;
    }
    if (!is_letter(c)) continue;
    UErrorCode err = U_ZERO_ERROR;
    const UScriptCode script = uscript_getScript(c, &err);
    if (U_FAILURE(err) || script == USCRIPT_COMMON ||
        script == USCRIPT_INHERITED || script == USCRIPT_UNKNOWN ||
        script == USCRIPT_INVALID_CODE) {
      continue;
    }
    fn(script);
  }
}

using ScriptBits = std::bitset<USCRIPT_CODE_LIMIT>;

ScriptBits script_bits(std::string_view text) {
  ScriptBits bits;
  for_each_letter_script(text, [&](UScriptCode s) { bits.set(s); });
  return bits;
}

ScriptBits script_bits(const ScriptSet& names) {
  ScriptBits bits;
  for (const std::string& name : names) {
    const int32_t code = u_getPropertyValueEnum(UCHAR_SCRIPT, name.c_str());
    if (code >= 0 && code < USCRIPT_CODE_LIMIT) bits.set(code);
  }
  return bits;
}

}  // namespace

std::map<LanguageCode, ScriptSet> LangScriptConfig::default_expected_scripts() {
  std::map<LanguageCode, ScriptSet> m;
  for (const LanguageCode& lang : task_languages()) m[lang] = {"Latin"};
  m[LanguageCode("ta")] = {"Latin", "Tamil"};
  return m;
}

void validate(const LangScriptConfig& cfg) {
  if (cfg.allowed_langs.empty()) {
    throw BitextError(ErrorCode::kInvalidArgument, "allowed_langs is empty");
  }
  if (!(cfg.confidence_threshold >= 0.0 && cfg.confidence_threshold <= 1.0)) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "confidence_threshold must be in [0, 1]");
  }
  if (!(cfg.fast_path_ratio > 0.0 && cfg.fast_path_ratio <= 1.0)) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "fast_path_ratio must be in (0, 1]");
  }
  for (const auto& [lang, scripts] : cfg.expected_scripts) {
    for (const std::string& name : scripts) {
      if (u_getPropertyValueEnum(UCHAR_SCRIPT, name.c_str()) < 0) {
        throw BitextError(ErrorCode::kInvalidArgument,
                          "unknown script name '" + name + "' for language '" +
                              lang.str() + "'");
      }
    }
  }
}

ScriptSet scripts_of(std::string_view text) {
  const ScriptBits bits = script_bits(text);
  ScriptSet out;
  for (int s = 0; s < USCRIPT_CODE_LIMIT; ++s) {
    if (bits.test(s)) out.insert(uscript_getName(static_cast<UScriptCode>(s)));
  }
  return out;
}

std::map<std::string, std::size_t> script_letter_counts(std::string_view text) {
  std::vector<std::size_t> counts(USCRIPT_CODE_LIMIT, 0);
  for_each_letter_script(text, [&](UScriptCode s) { ++counts[s]; });
  std::map<std::string, std::size_t> out;
  for (int s = 0; s < USCRIPT_CODE_LIMIT; ++s) {
    if (counts[s] != 0) {
      out[uscript_getName(static_cast<UScriptCode>(s))] = counts[s];
    }
  }
  return out;
}

Verdict script_filter(const BitextRecord& record, const LangScriptConfig& cfg) {
  ScriptBits expected;
  for (const LanguageCode& lang : {record.src_lang, record.tgt_lang}) {
    auto it = cfg.expected_scripts.find(lang);
    if (it != cfg.expected_scripts.end()) expected |= script_bits(it->second);
  }
  const ScriptBits foreign_src = script_bits(record.src_text) & ~expected;
  const ScriptBits foreign_tgt = script_bits(record.tgt_text) & ~expected;
  if (foreign_src != foreign_tgt) {
    return Verdict::remove(ReasonCode::kScriptMismatch, kScriptFilterName);
  }
  return Verdict::keep();
}

}  // namespace bitext

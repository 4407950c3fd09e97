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

#include "bitext/types.hpp"

namespace bitext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "IO_ERROR";
    case ErrorCode::kLineCountMismatch: return "LINE_COUNT_MISMATCH";
    case ErrorCode::kInvalidUtf8: return "INVALID_UTF8";
    case ErrorCode::kInsufficientSeed: return "INSUFFICIENT_SEED";
    case ErrorCode::kNoProfiles: return "NO_PROFILES";
    case ErrorCode::kProfileFormat: return "PROFILE_FORMAT";
    case ErrorCode::kSameLanguage: return "SAME_LANGUAGE";
    case ErrorCode::kMalformedTag: return "MALFORMED_TAG";
    case ErrorCode::kInsufficientCleanRecords: return "INSUFFICIENT_CLEAN_RECORDS";
    case ErrorCode::kMissingForeignCorpus: return "MISSING_FOREIGN_CORPUS";
    case ErrorCode::kInvalidManifest: return "INVALID_MANIFEST";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

LanguageCode::LanguageCode(std::string_view code) {
  auto parsed = parse(code);
  if (!parsed) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "invalid language code '" + std::string(code) +
                          "': expected two lowercase ASCII letters");
  }
  chars_ = parsed->chars_;
}

std::optional<LanguageCode> LanguageCode::parse(std::string_view code) noexcept {
  if (code.size() != 2) return std::nullopt;
  for (char c : code) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  LanguageCode out;
  out.chars_ = {code[0], code[1]};
  return out;
}

const LanguageSet& task_languages() {
  static const LanguageSet kTask = {
      LanguageCode("en"), LanguageCode("id"), LanguageCode("jv"),
      LanguageCode("ms"), LanguageCode("ta"), LanguageCode("tl"),
  };
  return kTask;
}

std::string_view to_string(ReasonCode reason) {
  switch (reason) {
    case ReasonCode::kNone: return "NONE";
    case ReasonCode::kEmpty: return "EMPTY";
    case ReasonCode::kTooLong: return "TOO_LONG";
    case ReasonCode::kKeyword: return "KEYWORD";
    case ReasonCode::kSymbol: return "SYMBOL";
    case ReasonCode::kNumberMismatch: return "NUMBER_MISMATCH";
    case ReasonCode::kLangForeign: return "LANG_FOREIGN";
    case ReasonCode::kScriptMismatch: return "SCRIPT_MISMATCH";
    case ReasonCode::kDupPair: return "DUP_PAIR";
    case ReasonCode::kDupSide: return "DUP_SIDE";
    case ReasonCode::kDupPartial: return "DUP_PARTIAL";
    case ReasonCode::kDupIdentical: return "DUP_IDENTICAL";
  }
  return "NONE";
}

std::optional<ReasonCode> parse_reason(std::string_view name) {
  for (ReasonCode r : kAllReasons) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

Verdict Verdict::remove(ReasonCode reason, std::string_view filter_name) {
  if (reason == ReasonCode::kNone) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "remove verdict requires a reason other than NONE");
  }
  Verdict v;
  v.decision_ = Decision::kRemove;
  v.reason_ = reason;
  v.filter_name_ = std::string(filter_name);
  return v;
}

}  // namespace bitext

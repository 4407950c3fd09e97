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

// Core domain types shared by every filter.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bitext {

// Error categories surfaced by the library. Each maps to one failure mode
// an operator can act on.
enum class ErrorCode {
  kIo,
  kLineCountMismatch,
  kInvalidUtf8,
  kInsufficientSeed,
  kNoProfiles,
  kProfileFormat,
  kSameLanguage,
  kMalformedTag,
  kInsufficientCleanRecords,
  kMissingForeignCorpus,
  kInvalidManifest,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

class BitextError : public std::runtime_error {
 public:
  BitextError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Two-letter ISO-639-1 code, e.g. "en" or "tl".
class LanguageCode {
 public:
  // Throws BitextError(kInvalidArgument) unless `code` is two lowercase
  // ASCII letters.
  explicit LanguageCode(std::string_view code);

  static std::optional<LanguageCode> parse(std::string_view code) noexcept;

  std::string_view view() const noexcept { return {chars_.data(), 2}; }
  std::string str() const { return std::string(view()); }

  friend auto operator<=>(const LanguageCode&, const LanguageCode&) = default;

 private:
  LanguageCode() = default;
  std::array<char, 2> chars_{};
};

using LanguageSet = std::set<LanguageCode>;

// en, id, jv, ms, ta, tl.
const LanguageSet& task_languages();

struct BitextRecord {
  std::string dataset_id;
  std::size_t line_no = 0;  // 1-based
  LanguageCode src_lang{"en"};
  LanguageCode tgt_lang{"id"};
  std::string src_text;
  std::string tgt_text;

  friend bool operator==(const BitextRecord&, const BitextRecord&) = default;
};

enum class ReasonCode : std::uint8_t {
  kNone,
  kEmpty,
  kTooLong,
  kKeyword,
  kSymbol,
  kNumberMismatch,
  kLangForeign,
  kScriptMismatch,
  kDupPair,
  kDupSide,
  kDupPartial,
  kDupIdentical,
};

inline constexpr std::size_t kReasonCount = 12;

inline constexpr std::array<ReasonCode, kReasonCount> kAllReasons = {
    ReasonCode::kNone,           ReasonCode::kEmpty,
    ReasonCode::kTooLong,        ReasonCode::kKeyword,
    ReasonCode::kSymbol,         ReasonCode::kNumberMismatch,
    ReasonCode::kLangForeign,    ReasonCode::kScriptMismatch,
    ReasonCode::kDupPair,        ReasonCode::kDupSide,
    ReasonCode::kDupPartial,     ReasonCode::kDupIdentical,
};

// Audit spelling, e.g. "DUP_IDENTICAL".
std::string_view to_string(ReasonCode reason);
std::optional<ReasonCode> parse_reason(std::string_view name);

enum class Decision : std::uint8_t { kKeep, kRemove };

// Keep verdicts always carry kNone; remove verdicts never do. The factory
// functions are the only way to build one.
class Verdict {
 public:
  static Verdict keep() { return Verdict(); }
  static Verdict remove(ReasonCode reason, std::string_view filter_name);

  Decision decision() const noexcept { return decision_; }
  ReasonCode reason() const noexcept { return reason_; }
  const std::string& filter_name() const noexcept { return filter_name_; }
  bool kept() const noexcept { return decision_ == Decision::kKeep; }
  bool removed() const noexcept { return decision_ == Decision::kRemove; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict() = default;

  Decision decision_ = Decision::kKeep;
  ReasonCode reason_ = ReasonCode::kNone;
  std::string filter_name_;
};

}  // namespace bitext

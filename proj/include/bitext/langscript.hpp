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

// Language identification and Unicode script consistency.
//
// The detector is a character-trigram classifier. Each profile stores raw
// trigram counts; a text is scored against every profile by the
// log-likelihood of its trigrams, with a fixed floor for trigrams the profile
// never saw. A script fast-path answers immediately when nearly all letters
// belong to a script that only one configured language uses (Tamil, for the
// default task languages).

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitext/types.hpp"

namespace bitext {

inline constexpr std::string_view kLanguageFilterName = "language";
inline constexpr std::string_view kScriptFilterName = "script";

using ScriptSet = std::set<std::string>;

struct LangScriptConfig {
  LanguageSet allowed_langs = task_languages();
  double confidence_threshold = 0.9;
  std::size_t min_chars_for_langid = 20;
  // Share of letters one script must hold for the fast-path to fire.
  double fast_path_ratio = 0.9;
  std::map<LanguageCode, ScriptSet> expected_scripts = default_expected_scripts();

  // en/id/jv/ms/tl -> {Latin}; ta -> {Tamil, Latin}.
  static std::map<LanguageCode, ScriptSet> default_expected_scripts();
};

void validate(const LangScriptConfig& cfg);

// ICU script names ("Latin", "Tamil", "Han", ...) of every letter in `text`.
// Common, Inherited and Unknown are never reported.
ScriptSet scripts_of(std::string_view text);

// Letter counts per script, same exclusions as scripts_of.
std::map<std::string, std::size_t> script_letter_counts(std::string_view text);

// Removes with SCRIPT_MISMATCH when the two sides carry different sets of
// scripts outside the pair's expected scripts (the union over both
// languages).
Verdict script_filter(const BitextRecord& record, const LangScriptConfig& cfg);

// Trigram keys pack three code points of 21 bits each.
using TrigramKey = std::uint64_t;

// Code-point trigrams of the lowercased, normalized text. Characters that
// are neither letters nor combining marks act as word separators; each word
// run is padded with one space on both sides.
std::vector<TrigramKey> trigram_keys(std::string_view text);
std::string trigram_to_string(TrigramKey key);
std::optional<TrigramKey> trigram_from_string(std::string_view trigram);

struct LangProfile {
  LanguageCode lang{"en"};
  std::unordered_map<TrigramKey, std::uint64_t> counts;
  std::uint64_t total_trigrams = 0;

  double frequency(TrigramKey key) const;
  std::map<std::string, double> trigram_freqs() const;

  // Most frequent first; ties broken by trigram text.
  std::vector<std::pair<std::string, std::uint64_t>> ranked() const;
};

inline constexpr std::size_t kMinSeedChars = 10000;

// Throws kInsufficientSeed when the normalized seed lines total fewer than
// kMinSeedChars characters.
LangProfile build_profile(std::span<const std::string> seed_lines,
                          LanguageCode lang);

// Text format: optional "# ..." comment lines, a header "lang<TAB>total",
// then "trigram<TAB>count" lines.
void save_profile(const LangProfile& profile, const std::filesystem::path& path);
LangProfile load_profile(const std::filesystem::path& path);

// Every "*.profile" file in `dir`, sorted by language code.
std::vector<LangProfile> load_profiles_dir(const std::filesystem::path& dir);

struct Detection {
  std::optional<LanguageCode> lang;  // nullopt means UNDETERMINED
  double confidence = 0.0;

  bool determined() const { return lang.has_value(); }
};

struct DetectorOptions {
  std::size_t min_chars = 20;
  double fast_path_ratio = 0.9;
  // Script name -> languages written in it. Scripts with exactly one
  // language enable the fast-path.
  std::map<std::string, LanguageSet> script_languages;

  static DetectorOptions from_config(const LangScriptConfig& cfg);
};

inline constexpr double kUnseenTrigramFloor = 1e-7;

class LanguageDetector {
 public:
  // Throws kNoProfiles when `profiles` is empty.
  LanguageDetector(std::vector<LangProfile> profiles, DetectorOptions options);

  Detection detect(std::string_view text) const;

  // Per-language normalized log-likelihood (mean log-probability per
  // trigram) without the fast-path; empty when the text has no trigrams.
  std::map<LanguageCode, double> scores(std::string_view text) const;

  std::span<const LanguageCode> languages() const { return langs_; }
  const DetectorOptions& options() const { return options_; }

 private:
  struct Likelihoods {
    std::size_t trigrams = 0;
    std::vector<double> total;  // per language, same order as langs_
  };

  std::optional<LanguageCode> fast_path(std::string_view norm) const;
  Likelihoods likelihoods(std::string_view norm) const;

  DetectorOptions options_;
  std::vector<LanguageCode> langs_;  // sorted
  // Trigram -> row offset into log_probs_/seen_ (one entry per language).
  std::unordered_map<TrigramKey, std::size_t> rows_;
  std::vector<double> log_probs_;
  std::vector<std::uint8_t> seen_;
};

Detection detect_language(std::string_view text,
                          std::span<const LangProfile> profiles,
                          const DetectorOptions& options = {});

// Removes with LANG_FOREIGN when either side is detected, at or above the
// confidence threshold, as a language outside allowed_langs.
Verdict language_filter(const BitextRecord& record,
                        const LanguageDetector& detector,
                        const LangScriptConfig& cfg);

}  // namespace bitext

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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "bitext/langscript.hpp"
#include "bitext/text.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;

constexpr char32_t kPad = U' ';
constexpr int kCodePointBits = 21;
constexpr TrigramKey kCodePointMask = (TrigramKey{1} << kCodePointBits) - 1;
constexpr std::string_view kProfileMagic = "# bitext-profile v1";

bool is_word_char(char32_t c) {
  if (c < 0x80) return (c | 0x20) >= 'a' && (c | 0x20) <= 'z';
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_L_MASK | U_GC_M_MASK)) != 0;
}

TrigramKey pack(char32_t a, char32_t b, char32_t c) {
  return (TrigramKey{a} << (2 * kCodePointBits)) |
         (TrigramKey{b} << kCodePointBits) | TrigramKey{c};
}

void append_word_trigrams(std::vector<char32_t>& word,
                          std::vector<TrigramKey>& out) {
  if (word.empty()) return;
  word.insert(word.begin(), kPad);
  word.push_back(kPad);
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    out.push_back(pack(word[i], word[i + 1], word[i + 2]));
  }
  word.clear();
}

[[noreturn]] void profile_error(const fs::path& path, std::size_t line,
                                const std::string& what) {
  throw BitextError(ErrorCode::kProfileFormat,
                    path.string() + ":" + std::to_string(line) + ": " + what);
}

template <typename Int>
bool parse_uint(std::string_view s, Int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

std::vector<TrigramKey> trigram_keys(std::string_view text) {
  std::vector<TrigramKey> out;
  std::vector<char32_t> word;
  for (char32_t c : decode_utf8(to_lower(normalize_text(text)))) {
    if (is_word_char(c)) {
      word.push_back(c);
    } else {
      append_word_trigrams(word, out);
    }
  }
  append_word_trigrams(word, out);
  return out;
}

std::string trigram_to_string(TrigramKey key) {
  std::string out;
  append_utf8(out, static_cast<char32_t>((key >> (2 * kCodePointBits)) & kCodePointMask));
  append_utf8(out, static_cast<char32_t>((key >> kCodePointBits) & kCodePointMask));
  append_utf8(out, static_cast<char32_t>(key & kCodePointMask));
  return out;
}

std::optional<TrigramKey> trigram_from_string(std::string_view trigram) {
  if (!is_valid_utf8(trigram)) return std::nullopt;
  const std::vector<char32_t> cps = decode_utf8(trigram);
  if (cps.size() != 3) return std::nullopt;
  return pack(cps[0], cps[1], cps[2]);
}

double LangProfile::frequency(TrigramKey key) const {
  if (total_trigrams == 0) return 0.0;
  auto it = counts.find(key);
  return it == counts.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(total_trigrams);
}

std::map<std::string, double> LangProfile::trigram_freqs() const {
  std::map<std::string, double> out;
  for (const auto& [key, count] : counts) {
    out[trigram_to_string(key)] =
        static_cast<double>(count) / static_cast<double>(total_trigrams);
  }
  return out;
}

std::vector<std::pair<std::string, std::uint64_t>> LangProfile::ranked() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  out.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    out.emplace_back(trigram_to_string(key), count);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

LangProfile build_profile(std::span<const std::string> seed_lines,
                          LanguageCode lang) {
  std::size_t chars = 0;
  LangProfile profile;
  profile.lang = lang;
  for (const std::string& line : seed_lines) {
    chars += char_count(normalize_text(line));
    for (TrigramKey key : trigram_keys(line)) {
      ++profile.counts[key];
      ++profile.total_trigrams;
    }
  }
  if (chars < kMinSeedChars) {
    throw BitextError(ErrorCode::kInsufficientSeed,
                      "seed text for '" + lang.str() + "' has " +
                          std::to_string(chars) + " characters; at least " +
                          std::to_string(kMinSeedChars) + " required");
  }
  return profile;
}

void save_profile(const LangProfile& profile, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw BitextError(ErrorCode::kIo, "cannot write profile '" + path.string() + "'");
  }
  out << kProfileMagic << '\n'
      << profile.lang.view() << '\t' << profile.total_trigrams << '\n';
  for (const auto& [trigram, count] : profile.ranked()) {
    out << trigram << '\t' << count << '\n';
  }
  out.flush();
  if (!out) {
    throw BitextError(ErrorCode::kIo, "write failed on '" + path.string() + "'");
  }
}

LangProfile load_profile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw BitextError(ErrorCode::kIo, "cannot open profile '" + path.string() + "'");
  }
  std::string line;
  std::size_t line_no = 0;
  std::optional<LangProfile> profile;
  std::uint64_t sum = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!profile && (line.empty() || line.front() == '#')) continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) profile_error(path, line_no, "missing tab");
    const std::string_view head(line.data(), tab);
    const std::string_view value(line.data() + tab + 1, line.size() - tab - 1);
    std::uint64_t n = 0;
    if (!parse_uint(value, n)) profile_error(path, line_no, "bad count");
    if (!profile) {
      auto lang = LanguageCode::parse(head);
      if (!lang) profile_error(path, line_no, "bad language code in header");
      profile.emplace();
      profile->lang = *lang;
      profile->total_trigrams = n;
      continue;
    }
    auto key = trigram_from_string(head);
    if (!key) profile_error(path, line_no, "trigram must be three code points");
    if (!profile->counts.emplace(*key, n).second) {
      profile_error(path, line_no, "duplicate trigram");
    }
    sum += n;
  }
  if (!profile) profile_error(path, line_no, "missing header");
  if (sum != profile->total_trigrams) {
    profile_error(path, line_no,
                  "counts sum to " + std::to_string(sum) + " but header says " +
                      std::to_string(profile->total_trigrams));
  }
  return std::move(*profile);
}

std::vector<LangProfile> load_profiles_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw BitextError(ErrorCode::kNoProfiles,
                      "profiles directory '" + dir.string() + "' does not exist");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".profile") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<LangProfile> profiles;
  for (const fs::path& f : files) profiles.push_back(load_profile(f));
  std::sort(profiles.begin(), profiles.end(),
            [](const LangProfile& a, const LangProfile& b) { return a.lang < b.lang; });
  if (profiles.empty()) {
    throw BitextError(ErrorCode::kNoProfiles,
                      "no *.profile files in '" + dir.string() + "'");
  }
  return profiles;
}

DetectorOptions DetectorOptions::from_config(const LangScriptConfig& cfg) {
  DetectorOptions opts;
  opts.min_chars = cfg.min_chars_for_langid;
  opts.fast_path_ratio = cfg.fast_path_ratio;
  for (const auto& [lang, scripts] : cfg.expected_scripts) {
    for (const std::string& script : scripts) opts.script_languages[script].insert(lang);
  }
  return opts;
}

LanguageDetector::LanguageDetector(std::vector<LangProfile> profiles,
                                   DetectorOptions options)
    : options_(std::move(options)) {
  if (profiles.empty()) {
    throw BitextError(ErrorCode::kNoProfiles, "language detector needs at least one profile");
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const LangProfile& a, const LangProfile& b) { return a.lang < b.lang; });
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    if (profiles[i].lang == profiles[i - 1].lang) {
      throw BitextError(ErrorCode::kProfileFormat,
                        "duplicate profile for '" + profiles[i].lang.str() + "'");
    }
  }
  const std::size_t k = profiles.size();
  const double log_floor = std::log(kUnseenTrigramFloor);
  for (const LangProfile& p : profiles) langs_.push_back(p.lang);
  for (std::size_t j = 0; j < k; ++j) {
    const LangProfile& p = profiles[j];
    if (p.total_trigrams == 0) continue;
    const double log_total = std::log(static_cast<double>(p.total_trigrams));
    for (const auto& [key, count] : p.counts) {
      auto [it, inserted] = rows_.try_emplace(key, log_probs_.size());
      if (inserted) {
        log_probs_.resize(log_probs_.size() + k, log_floor);
        seen_.resize(seen_.size() + k, 0);
      }
      log_probs_[it->second + j] = std::log(static_cast<double>(count)) - log_total;
      seen_[it->second + j] = 1;
    }
  }
}

std::optional<LanguageCode> LanguageDetector::fast_path(std::string_view text) const {
  const auto counts = script_letter_counts(text);
  std::size_t total = 0;
  const std::pair<const std::string, std::size_t>* top = nullptr;
  for (const auto& entry : counts) {
    total += entry.second;
    if (top == nullptr || entry.second > top->second) top = &entry;
  }
  if (top == nullptr ||
      static_cast<double>(top->second) < options_.fast_path_ratio * static_cast<double>(total)) {
    return std::nullopt;
  }
  auto it = options_.script_languages.find(top->first);
  if (it == options_.script_languages.end() || it->second.size() != 1) return std::nullopt;
  return *it->second.begin();
}

LanguageDetector::Likelihoods LanguageDetector::likelihoods(std::string_view norm) const {
  std::vector<TrigramKey> keys = trigram_keys(norm);
  Likelihoods out;
  out.trigrams = keys.size();
  const std::size_t k = langs_.size();
  out.total.assign(k, 0.0);
  if (keys.empty()) return out;

  std::sort(keys.begin(), keys.end());
  const double log_floor = std::log(kUnseenTrigramFloor);
  std::vector<std::size_t> unseen(k, 0);
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    const auto mult = static_cast<double>(j - i);
    auto row = rows_.find(keys[i]);
    for (std::size_t p = 0; p < k; ++p) {
      if (row == rows_.end() || !seen_[row->second + p]) {
        out.total[p] += mult * log_floor;
        ++unseen[p];
      } else {
        out.total[p] += mult * log_probs_[row->second + p];
      }
    }
    i = j;
  }
  // Renormalize each smoothed distribution over its seen vocabulary plus the
  // unseen trigrams that occur in this text.
  const auto n = static_cast<double>(keys.size());
  for (std::size_t p = 0; p < k; ++p) {
    out.total[p] -= n * std::log1p(kUnseenTrigramFloor * static_cast<double>(unseen[p]));
  }
  return out;
}

std::map<LanguageCode, double> LanguageDetector::scores(std::string_view text) const {
  std::map<LanguageCode, double> out;
  const Likelihoods ll = likelihoods(normalize_text(text));
  if (ll.trigrams == 0) return out;
  for (std::size_t p = 0; p < langs_.size(); ++p) {
    out.emplace(langs_[p], ll.total[p] / static_cast<double>(ll.trigrams));
  }
  return out;
}

Detection LanguageDetector::detect(std::string_view text) const {
  const std::string norm = normalize_text(text);
  if (char_count(norm) < options_.min_chars) return {};
  if (auto lang = fast_path(norm)) return {lang, 1.0};

  const Likelihoods ll = likelihoods(norm);
  if (ll.trigrams == 0) return {};
  std::size_t best = 0;
  for (std::size_t p = 1; p < langs_.size(); ++p) {
    if (ll.total[p] > ll.total[best]) best = p;
  }
  // Softmax over total log-likelihoods, read off at the winner.
  double denom = 0.0;
  for (std::size_t p = 0; p < langs_.size(); ++p) {
    denom += std::exp(ll.total[p] - ll.total[best]);
  }
  return {langs_[best], 1.0 / denom};
}

Detection detect_language(std::string_view text, std::span<const LangProfile> profiles,
                          const DetectorOptions& options) {
  LanguageDetector detector({profiles.begin(), profiles.end()}, options);
  return detector.detect(text);
}

Verdict language_filter(const BitextRecord& record, const LanguageDetector& detector,
                        const LangScriptConfig& cfg) {
  for (const std::string* side : {&record.src_text, &record.tgt_text}) {
    if (char_count(normalize_text(*side)) < cfg.min_chars_for_langid) continue;
    const Detection d = detector.detect(*side);
    if (d.lang && !cfg.allowed_langs.contains(*d.lang) &&
        d.confidence >= cfg.confidence_threshold) {
      return Verdict::remove(ReasonCode::kLangForeign, kLanguageFilterName);
    }
  }
  return Verdict::keep();
}

}  // namespace bitext

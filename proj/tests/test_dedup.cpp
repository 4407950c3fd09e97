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


#include <gtest/gtest.h>

#include <random>

#include "bitext/dedup.hpp"
#include "bitext/text.hpp"

namespace bitext {
namespace {

BitextRecord rec(std::string src, std::string tgt, std::size_t line = 1) {
  BitextRecord r;
  r.dataset_id = "d";
  r.line_no = line;
  r.src_text = std::move(src);
  r.tgt_text = std::move(tgt);
  return r;
}

std::vector<BitextRecord> recs(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<BitextRecord> out;
  for (const auto& [s, t] : pairs) out.push_back(rec(s, t, out.size() + 1));
  return out;
}

std::vector<ReasonCode> reasons(const std::vector<Verdict>& verdicts) {
  std::vector<ReasonCode> out;
  for (const Verdict& v : verdicts) out.push_back(v.reason());
  return out;
}

TEST(IdenticalPair, Examples) {
  EXPECT_TRUE(is_identical_pair(rec("Those who are invited will find the way.",
                                    "Those who are invited will find the way.")));
  EXPECT_TRUE(is_identical_pair(rec("Gazelle, whose face the full moon forms:",
                                    "Gazelle, whose face the full moon forms:")));
  EXPECT_TRUE(is_identical_pair(rec("same  text ", " same text")));
  EXPECT_FALSE(is_identical_pair(rec("hello", "hola")));
  EXPECT_FALSE(is_identical_pair(rec("", "  ")));
  EXPECT_FALSE(is_identical_pair(rec("Case", "case")));
}

TEST(PartialDuplicate, Examples) {
  const DedupConfig cfg;
  EXPECT_TRUE(is_partial_duplicate(
      rec("CJ E&M Corporation.", "Drama iki diprodhuksi d\xC3\xA9ning CJ E&M Corporation."), cfg));
  EXPECT_TRUE(is_partial_duplicate(
      rec("New Orleans, Louisiana.", "Lair ing New Orleans, Louisiana."), cfg));
  EXPECT_TRUE(is_partial_duplicate(
      rec("Edward Thomas Hardy.", "Jeneng dawan\xC3\xA9 ya iku Edward Thomas Hardy."), cfg));
  EXPECT_FALSE(is_partial_duplicate(rec("a", "a and b"), cfg));
  EXPECT_FALSE(is_partial_duplicate(rec("same thing here", "same thing here"), cfg));
}

TEST(PartialDuplicate, IsSymmetric) {
  const DedupConfig cfg;
  EXPECT_TRUE(is_partial_duplicate(rec("Lair ing New Orleans, Louisiana.", "New Orleans, Louisiana."),
                                   cfg));
}

TEST(PartialDuplicate, MinCharsBoundary) {
  DedupConfig cfg;
  cfg.partial_min_chars = 10;
  EXPECT_TRUE(is_partial_duplicate(rec("0123456789", "x 0123456789"), cfg));
  EXPECT_FALSE(is_partial_duplicate(rec("012345678", "x 012345678"), cfg));
  // Counted in characters, not bytes.
  EXPECT_FALSE(is_partial_duplicate(
      rec("\xE0\xAE\xA4\xE0\xAE\xA4\xE0\xAE\xA4", "x \xE0\xAE\xA4\xE0\xAE\xA4\xE0\xAE\xA4"), cfg));
}

TEST(DedupPass, OneSidedGroupKeepsFirst) {
  const auto records = recs({
      {"Error reading from file: %s", "Error sa pagbasa ng talaksang '%s': %s"},
      {"Error seeking in file: %s", "Error sa pagbasa ng talaksang '%s': %s"},
      {"Error closing file: %s", "Error sa pagbasa ng talaksang '%s': %s"},
  });
  EXPECT_EQ(reasons(dedup_pass(records, {})),
            (std::vector{ReasonCode::kNone, ReasonCode::kDupSide, ReasonCode::kDupSide}));
}

TEST(DedupPass, RepeatedPair) {
  const auto records = recs({{"good morning", "selamat pagi"}, {"good morning", "selamat pagi"}});
  EXPECT_EQ(reasons(dedup_pass(records, {})),
            (std::vector{ReasonCode::kNone, ReasonCode::kDupPair}));
}

TEST(DedupPass, UniquePairsAllKept) {
  const auto records = recs({{"one", "satu"}, {"two", "dua"}, {"three", "tiga"}, {"four", "empat"}});
  for (const Verdict& v : dedup_pass(records, {})) EXPECT_TRUE(v.kept());
}

TEST(DedupPass, PriorityOrder) {
  const auto records = recs({
      {"Those who are invited will find the way.", "Those who are invited will find the way."},
      {"CJ E&M Corporation.", "Drama iki diprodhuksi d\xC3\xA9ning CJ E&M Corporation."},
      {"Those who are invited will find the way.", "Mereka yang diundang akan menemukan jalan."},
  });
  // The identical pair is removed before it can register its sides, so the
  // third record is a first occurrence.
  EXPECT_EQ(reasons(dedup_pass(records, {})),
            (std::vector{ReasonCode::kDupIdentical, ReasonCode::kDupPartial, ReasonCode::kNone}));
}

TEST(DedupPass, DisabledRulesKeep) {
  DedupConfig cfg;
  cfg.enable_identical = false;
  cfg.enable_partial = false;
  cfg.enable_one_side = false;
  cfg.enable_exact_pair = false;
  const auto records = recs({{"a a a a a a", "a a a a a a"}, {"x", "y"}, {"x", "z"}, {"x", "y"}});
  for (const Verdict& v : dedup_pass(records, cfg)) EXPECT_TRUE(v.kept());
}

TEST(DedupPass, NormalizationMakesWhitespaceVariantsEqual) {
  const auto records = recs({{"good  morning", "selamat pagi"}, {" good morning", "selamat\tpagi "}});
  EXPECT_EQ(dedup_pass(records, {})[1].reason(), ReasonCode::kDupPair);
}

TEST(DedupConfigTest, RejectsZeroMinChars) {
  DedupConfig cfg;
  cfg.partial_min_chars = 0;
  EXPECT_THROW(validate(cfg), BitextError);
}

// Straightforward quadratic restatement of the dedup rules.
std::vector<ReasonCode> brute_force(const std::vector<BitextRecord>& records,
                                    std::size_t min_chars) {
  std::vector<ReasonCode> out;
  std::vector<std::pair<std::string, std::string>> eligible;
  for (const BitextRecord& r : records) {
    const std::string s = normalize_text(r.src_text);
    const std::string t = normalize_text(r.tgt_text);
    if (!s.empty() && s == t) {
      out.push_back(ReasonCode::kDupIdentical);
      continue;
    }
    const std::string& shorter = s.size() < t.size() ? s : t;
    const std::string& longer = s.size() < t.size() ? t : s;
    if (shorter.size() != longer.size() && char_count(shorter) >= min_chars &&
        longer.find(shorter) != std::string::npos) {
      out.push_back(ReasonCode::kDupPartial);
      continue;
    }
    bool pair = false;
    bool side = false;
    for (const auto& [ps, pt] : eligible) {
      if (ps == s && pt == t) pair = true;
      if (ps == s || pt == t) side = true;
    }
    eligible.emplace_back(s, t);
    out.push_back(pair ? ReasonCode::kDupPair : side ? ReasonCode::kDupSide : ReasonCode::kNone);
  }
  return out;
}

std::vector<BitextRecord> random_corpus(std::mt19937& rng, std::size_t n) {
  static const std::vector<std::string> words = {"aa", "bb", "cc", "dd", "aa bb", "bb cc"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> nwords(1, 3);
  auto sentence = [&] {
    std::string s;
    for (int i = nwords(rng); i > 0; --i) s += (s.empty() ? "" : " ") + words[pick(rng)];
    return s;
  };
  std::vector<BitextRecord> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rec(sentence(), sentence(), i + 1));
  return out;
}

TEST(DedupProperties, MatchesBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto records = random_corpus(rng, 1 + rng() % 40);
    DedupConfig cfg;
    cfg.partial_min_chars = 2 + rng() % 6;
    EXPECT_EQ(reasons(dedup_pass(records, cfg)), brute_force(records, cfg.partial_min_chars));
  }
}

TEST(DedupProperties, KeptRecordsArePairwiseDistinct) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const auto records = random_corpus(rng, 1 + rng() % 40);
    DedupConfig cfg;
    cfg.partial_min_chars = 3;
    const auto verdicts = dedup_pass(records, cfg);
    std::vector<std::pair<std::string, std::string>> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (verdicts[i].kept()) {
        kept.emplace_back(normalize_text(records[i].src_text), normalize_text(records[i].tgt_text));
      }
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      EXPECT_NE(kept[i].first, kept[i].second);
      EXPECT_FALSE(is_partial_normalized(kept[i].first, kept[i].second, cfg.partial_min_chars));
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        EXPECT_NE(kept[i].first, kept[j].first);
        EXPECT_NE(kept[i].second, kept[j].second);
      }
    }
  }
}

TEST(DedupProperties, Idempotent) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto records = random_corpus(rng, 1 + rng() % 40);
    const auto verdicts = dedup_pass(records, {});
    std::vector<BitextRecord> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (verdicts[i].kept()) kept.push_back(records[i]);
    }
    for (const Verdict& v : dedup_pass(kept, {})) EXPECT_TRUE(v.kept());
  }
}

}  // namespace
}  // namespace bitext

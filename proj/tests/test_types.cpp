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

#include <cmath>
#include <random>
#include <stdexcept>

#include "bitext/stats.hpp"
#include "bitext/types.hpp"
#include "reduction_rows.hpp"

namespace bitext {
namespace {

TEST(LanguageCodeTest, AcceptsTwoLowercaseLetters) {
  EXPECT_EQ(LanguageCode("en").str(), "en");
  EXPECT_TRUE(LanguageCode::parse("ta"));
  EXPECT_FALSE(LanguageCode::parse("EN"));
  EXPECT_FALSE(LanguageCode::parse("eng"));
  EXPECT_FALSE(LanguageCode::parse("e"));
  EXPECT_FALSE(LanguageCode::parse("e1"));
  EXPECT_THROW(LanguageCode("x"), BitextError);
}

TEST(LanguageCodeTest, TaskLanguages) {
  const LanguageSet& langs = task_languages();
  EXPECT_EQ(langs.size(), 6u);
  for (const char* code : {"en", "id", "jv", "ms", "ta", "tl"}) {
    EXPECT_TRUE(langs.count(LanguageCode(code))) << code;
  }
}

TEST(ReasonCodeTest, SpellingsRoundTrip) {
  const char* expected[] = {"NONE",          "EMPTY",        "TOO_LONG",        "KEYWORD",
                            "SYMBOL",        "NUMBER_MISMATCH", "LANG_FOREIGN",  "SCRIPT_MISMATCH",
                            "DUP_PAIR",      "DUP_SIDE",     "DUP_PARTIAL",     "DUP_IDENTICAL"};
  for (std::size_t i = 0; i < kReasonCount; ++i) {
    EXPECT_EQ(to_string(kAllReasons[i]), expected[i]);
    EXPECT_EQ(parse_reason(expected[i]), kAllReasons[i]);
  }
  EXPECT_FALSE(parse_reason("dup_pair"));
}

TEST(VerdictTest, DecisionAndReasonAreCoupled) {
  const Verdict keep = Verdict::keep();
  EXPECT_TRUE(keep.kept());
  EXPECT_EQ(keep.reason(), ReasonCode::kNone);
  for (ReasonCode r : kAllReasons) {
    if (r == ReasonCode::kNone) {
      EXPECT_THROW(Verdict::remove(r, "x"), std::exception);
      continue;
    }
    const Verdict v = Verdict::remove(r, "f");
    EXPECT_TRUE(v.removed());
    EXPECT_EQ(v.reason(), r);
    EXPECT_EQ(v.filter_name(), "f");
  }
}

TEST(ReductionPct, ReferenceRows) {
  for (const auto& row : testing::kReductionRows) {
    EXPECT_EQ(format_reduction_pct(row.before, row.after), row.reduction) << row.iso;
  }
}

TEST(ReductionPct, Boundaries) {
  EXPECT_EQ(format_reduction_pct(100, 100), "0.00");
  EXPECT_EQ(format_reduction_pct(0, 0), "0.00");
  EXPECT_EQ(format_reduction_pct(100, 0), "100.00");
  EXPECT_EQ(format_reduction_pct(3, 2), "33.33");
  EXPECT_EQ(format_reduction_pct(3, 1), "66.67");
  EXPECT_EQ(format_reduction_pct(8, 7), "12.50");
  EXPECT_EQ(format_reduction_pct(200000, 199999), "0.00");  // 0.0005 -> half-up at 3rd decimal
  EXPECT_EQ(format_reduction_pct(20000, 19999), "0.01");    // 0.005 rounds up
}

TEST(ReductionPct, WithinHalfAHundredthOfExactValue) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t before = 1 + rng() % 100000000;
    const std::uint64_t after = rng() % (before + 1);
    const double shown = std::stod(format_reduction_pct(before, after));
    const long double exact =
        100.0L * static_cast<long double>(before - after) / static_cast<long double>(before);
    EXPECT_LE(std::fabs(static_cast<long double>(shown) - exact), 0.005L + 1e-9L)
        << before << " " << after;
  }
}

TEST(MergeStats, SumsComponentwise) {
  FilterStats a{"a", "en-id", 10, 7, {}};
  a.removed(ReasonCode::kDupPair) = 3;
  FilterStats b{"b", "en-ms", 5, 5, {}};
  const std::vector<FilterStats> both = {a, b};
  const FilterStats m = merge_stats(both);
  EXPECT_EQ(m.before, 15u);
  EXPECT_EQ(m.after, 12u);
  EXPECT_EQ(m.removed(ReasonCode::kDupPair), 3u);
  EXPECT_EQ(m.lang_pair, "ALL");
  EXPECT_EQ(m.dataset_id, "TOTAL");
}

TEST(MergeStats, SingleInputKeepsCounts) {
  FilterStats a{"a", "en-id", 10, 6, {}};
  a.removed(ReasonCode::kKeyword) = 4;
  const FilterStats m = merge_stats(std::vector<FilterStats>{a});
  EXPECT_EQ(m.before, a.before);
  EXPECT_EQ(m.after, a.after);
  EXPECT_EQ(m.removed_by_reason, a.removed_by_reason);
}

TEST(MergeStats, PreservesConservation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<FilterStats> parts(1 + rng() % 6);
    for (FilterStats& s : parts) {
      s.after = rng() % 1000;
      s.before = s.after;
      for (std::size_t r = 1; r < kReasonCount; ++r) {
        const auto n = rng() % 50;
        s.removed_by_reason[r] = n;
        s.before += n;
      }
      ASSERT_TRUE(s.conserved());
    }
    const FilterStats m = merge_stats(parts);
    EXPECT_TRUE(m.conserved());
    EXPECT_NO_THROW(check_conservation(m));
  }
}

TEST(Conservation, ThrowsWhenUnbalanced) {
  FilterStats s{"d", "en-id", 10, 8, {}};
  s.removed(ReasonCode::kEmpty) = 1;
  EXPECT_THROW(check_conservation(s), std::logic_error);
  s.removed(ReasonCode::kEmpty) = 2;
  EXPECT_NO_THROW(check_conservation(s));
}

}  // namespace
}  // namespace bitext

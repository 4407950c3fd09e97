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

#include <map>
#include <random>

#include "bitext/io.hpp"
#include "bitext/manifest.hpp"
#include "bitext/pipeline.hpp"
#include "bitext/synthbench.hpp"
#include "golden.hpp"
#include "test_support.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;
using testing::read_file;
using testing::source_dir;
using testing::TempDir;

fs::path profiles_dir() { return source_dir() / "data" / "profiles"; }

const LanguageDetector& detector() {
  static const LanguageDetector d(load_profiles_dir(profiles_dir()),
                                  DetectorOptions::from_config(LangScriptConfig{}));
  return d;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

DatasetEntry write_dataset(const TempDir& dir, const std::string& id,
                           const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                           const char* sl = "en", const char* tl = "id") {
  DatasetEntry e;
  e.source.dataset_id = id;
  e.source.src_lang = LanguageCode(sl);
  e.source.tgt_lang = LanguageCode(tl);
  e.source.src_path = dir / (id + ".in." + sl);
  e.source.tgt_path = dir / (id + ".in." + tl);
  testing::write_file(e.source.src_path, join_lines(src));
  testing::write_file(e.source.tgt_path, join_lines(tgt));
  return e;
}

// line_no -> reason, from an audit file.
std::map<std::pair<std::string, std::size_t>, ReasonCode> audit_reasons(const fs::path& path) {
  std::map<std::pair<std::string, std::size_t>, ReasonCode> out;
  for (const AuditEntry& a : read_audit(path)) out[{a.dataset_id, a.line_no}] = a.reason;
  return out;
}

BitextRecord rec(std::string src, std::string tgt) {
  BitextRecord r;
  r.dataset_id = "d";
  r.src_text = std::move(src);
  r.tgt_text = std::move(tgt);
  return r;
}

TEST(Golden, PerLineOutcomes) {
  TempDir out;
  const DatasetManifest m = load_manifest(source_dir() / "tests" / "data" / "golden" / "manifest.json");
  RunOptions opts;
  opts.output_dir = out.path();
  opts.profiles_dir = profiles_dir();
  const PipelineResult result = run_pipeline(m, opts);
  ASSERT_TRUE(result.ok()) << result.failures.front().message;

  const auto reasons = audit_reasons(result.audit_path);
  for (const auto& g : testing::golden_datasets()) {
    for (std::size_t i = 0; i < g.expected.size(); ++i) {
      auto it = reasons.find({g.id, i + 1});
      const ReasonCode got = it == reasons.end() ? ReasonCode::kNone : it->second;
      EXPECT_EQ(to_string(got), to_string(g.expected[i])) << g.id << ":" << i + 1;
    }
  }
  EXPECT_EQ(reasons.size(), 12u);
  EXPECT_EQ(result.total.before, 15u);
  EXPECT_EQ(result.total.after, 3u);
}

TEST(Golden, SecondPassRemovesNothing) {
  TempDir out, out2;
  const DatasetManifest m = load_manifest(source_dir() / "tests" / "data" / "golden" / "manifest.json");
  RunOptions opts;
  opts.output_dir = out.path();
  opts.profiles_dir = profiles_dir();
  ASSERT_TRUE(run_pipeline(m, opts).ok());

  DatasetManifest again = m;
  for (DatasetEntry& e : again.entries) {
    e.source.src_path = filtered_path(out.path(), e.source.dataset_id, e.source.src_lang);
    e.source.tgt_path = filtered_path(out.path(), e.source.dataset_id, e.source.tgt_lang);
  }
  opts.output_dir = out2.path();
  const PipelineResult second = run_pipeline(again, opts);
  ASSERT_TRUE(second.ok());
  EXPECT_EQ(second.total.before, 3u);
  EXPECT_EQ(second.total.after, second.total.before);
  EXPECT_EQ(second.total.total_removed(), 0u);
}

TEST(Golden, CliStyleReportRows) {
  TempDir out;
  const DatasetManifest m = load_manifest(source_dir() / "tests" / "data" / "golden" / "manifest.json");
  RunOptions opts;
  opts.output_dir = out.path();
  opts.profiles_dir = profiles_dir();
  const PipelineResult result = run_pipeline(m, opts);
  const std::string report = read_file(result.report_path);
  EXPECT_NE(report.find("KDE4.en-id\ten-id\t2\t0\t100.00"), std::string::npos) << report;
  EXPECT_NE(report.find("MultiCCAligned.id-tl\tid-tl\t4\t2\t50.00"), std::string::npos);
  EXPECT_NE(report.find("TOTAL\tALL\t15\t3\t80.00"), std::string::npos);
}

TEST(Attribution, LengthBeatsNumber) {
  const std::string long_src = std::string(480, 'a') + " 12345678901234567890";
  const DatasetConfig cfg;
  const auto v = filter_records(std::vector{rec(long_src, "kata 1")}, cfg, &detector());
  EXPECT_EQ(v[0].reason(), ReasonCode::kTooLong);
}

TEST(Attribution, NumberExemptDatasetKeepsMismatchedRows) {
  DatasetConfig ted;
  ted.enabled.erase(FilterKind::kNumber);
  ted.content.drop_bracketed_lines = false;
  const std::vector<BitextRecord> rows = {rec("Di. 13:00 - 17:30", "Mo. 13:00 - 18:00"),
                                          rec("Di 24 nov. 10h \xE2\x80\x93 18h",
                                              "Sa 23 nov. 10h \xE2\x80\x93 18h")};
  for (const Verdict& v : filter_records(rows, ted, &detector())) EXPECT_TRUE(v.kept());
  DatasetConfig cc = ted;
  cc.enabled.insert(FilterKind::kNumber);
  for (const Verdict& v : filter_records(rows, cc, &detector())) {
    EXPECT_EQ(v.reason(), ReasonCode::kNumberMismatch);
  }
}

std::string repeat(const std::string& unit, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += unit;
  return s;
}

// One record per removable class; each is claimed by exactly one filter.
std::vector<BitextRecord> one_of_each() {
  return {
      rec(repeat("The river flows quietly past the old village. ", 14),
          "Sungai itu mengalir dengan tenang melewati desa tua."),
      rec("\xE2\x99\xAA la la la \xE2\x99\xAA", "\xE2\x99\xAA na na na \xE2\x99\xAA"),
      rec("Task Scheduler", "Penjadwal TugasComment"),
      rec("The weather was very nice yesterday and we went to the beach.",
          "D\xC3\xBCn hava \xC3\xA7ok g\xC3\xBCzeldi ve arkada\xC5\x9Flar\xC4\xB1mla birlikte sahile gittik."),
      rec("Chennai (\xE0\xAE\x9A\xE0\xAF\x86\xE0\xAE\xA9\xE0\xAF\x8D\xE0\xAE\xA9\xE0\xAF\x88) is large.",
          "Chennai adalah kota besar."),
      rec("The meeting starts at 9 in the morning.", "Rapat dimulai pukul 10 pagi."),
      rec("Good morning to all of you here.", "Good morning to all of you here."),
  };
}

const std::vector<std::pair<FilterKind, ReasonCode>> kOneOfEachReasons = {
    {FilterKind::kLength, ReasonCode::kTooLong},
    {FilterKind::kSymbol, ReasonCode::kSymbol},
    {FilterKind::kKeyword, ReasonCode::kKeyword},
    {FilterKind::kLanguage, ReasonCode::kLangForeign},
    {FilterKind::kScript, ReasonCode::kScriptMismatch},
    {FilterKind::kNumber, ReasonCode::kNumberMismatch},
    {FilterKind::kDedup, ReasonCode::kDupIdentical},
};

TEST(OneOfEach, AllFiltersRemoveEverything) {
  const auto records = one_of_each();
  const auto verdicts = filter_records(records, DatasetConfig{}, &detector());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(to_string(verdicts[i].reason()), to_string(kOneOfEachReasons[i].second)) << i;
  }
  EXPECT_EQ(tally("d", "en-id", verdicts).after, 0u);
}

TEST(OneOfEach, DisablingAFilterKeepsExactlyItsRecord) {
  const auto records = one_of_each();
  for (std::size_t k = 0; k < kOneOfEachReasons.size(); ++k) {
    DatasetConfig cfg;
    cfg.enabled.erase(kOneOfEachReasons[k].first);
    const auto verdicts = filter_records(records, cfg, &detector());
    for (std::size_t i = 0; i < records.size(); ++i) {
      EXPECT_EQ(verdicts[i].kept(), i == k) << to_string(kOneOfEachReasons[k].first) << " " << i;
    }
    EXPECT_EQ(tally("d", "en-id", verdicts).after, 1u);
  }
}

TEST(Dedup, RecordsRemovedEarlierAreInvisible) {
  const std::vector<BitextRecord> records = {rec("Open 3 files", "Buka 4 berkas"),
                                             rec("Open 3 files", "Buka 3 berkas")};
  const auto v = filter_records(records, DatasetConfig{}, &detector());
  EXPECT_EQ(v[0].reason(), ReasonCode::kNumberMismatch);
  EXPECT_TRUE(v[1].kept());
}

TEST(RecordFilterTest, LanguageFilterNeedsDetector) {
  EXPECT_THROW(RecordFilter(DatasetConfig{}, nullptr), BitextError);
  DatasetConfig cfg;
  cfg.enabled.erase(FilterKind::kLanguage);
  EXPECT_NO_THROW(RecordFilter(cfg, nullptr));
}

TEST(FilterKinds, NamesRoundTrip) {
  for (FilterKind k : kCanonicalFilterOrder) EXPECT_EQ(parse_filter_kind(to_string(k)), k);
  EXPECT_FALSE(parse_filter_kind("empty"));
}

// Random records mixing clean text with every kind of defect.
std::vector<BitextRecord> random_corpus(std::mt19937& rng, std::size_t n) {
  const std::vector<std::pair<std::string, std::string>> pool = {
      {"Open the file", "Buka berkas"},
      {"Open the file", "Buka berkasnya"},
      {"Close 2 windows", "Tutup 2 jendela"},
      {"Close 2 windows", "Tutup 3 jendela"},
      {"Same text here", "Same text here"},
      {"Save", "Simpan dokumen Save sekarang"},
      {"Task", "TugasName"},
      {"(laughs)", "(tertawa)"},
      {"", "kosong"},
      {repeat("long ", 120), "panjang"},
      {"Good night", "Selamat malam"},
      {"I visited \xE6\x97\xA5\xE6\x9C\xAC", "Saya ke Jepang"},
  };
  std::vector<BitextRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pool[rng() % pool.size()];
    out.push_back(rec(p.first, p.second));
    out.back().line_no = i + 1;
  }
  return out;
}

TEST(Properties, ConservationOnRandomCorpora) {
  std::mt19937 rng(61);
  for (int round = 0; round < 60; ++round) {
    const auto records = random_corpus(rng, 1 + rng() % 200);
    DatasetConfig cfg;
    for (FilterKind k : kCanonicalFilterOrder) {
      if (rng() % 3 == 0) cfg.enabled.erase(k);
    }
    const auto verdicts = filter_records(records, cfg, &detector(), {1 + rng() % 4, 1 + rng() % 50});
    const FilterStats stats = tally("d", "en-id", verdicts);
    EXPECT_TRUE(stats.conserved());
    EXPECT_NO_THROW(check_conservation(stats));
    EXPECT_EQ(stats.before, records.size());
  }
}

TEST(Properties, IdempotentOnRandomCorpora) {
  std::mt19937 rng(67);
  for (int round = 0; round < 40; ++round) {
    const auto records = random_corpus(rng, 1 + rng() % 200);
    const DatasetConfig cfg;
    const auto verdicts = filter_records(records, cfg, &detector());
    std::vector<BitextRecord> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (verdicts[i].kept()) kept.push_back(records[i]);
    }
    for (const Verdict& v : filter_records(kept, cfg, &detector())) EXPECT_TRUE(v.kept());
  }
}

TEST(Properties, BatchSizeAndWorkersDoNotChangeVerdicts) {
  const auto records = make_template_corpus(3000, 5);
  std::mt19937 rng(71);
  auto noisy = records;
  for (std::size_t i = 0; i < noisy.size(); i += 7) noisy[i].tgt_text = noisy[(i * 13) % noisy.size()].tgt_text;
  const DatasetConfig cfg;
  const auto base = filter_records(noisy, cfg, &detector(), {1, 8192});
  for (std::size_t workers : {2u, 4u, 8u}) {
    for (std::size_t batch : {1u, 97u, 1000u}) {
      EXPECT_EQ(filter_records(noisy, cfg, &detector(), {workers, batch}), base);
    }
  }
}

TEST(RunPipeline, OutputsStableAcrossWorkerCounts) {
  TempDir in;
  const auto records = make_template_corpus(5000, 9);
  std::vector<std::string> src, tgt;
  for (std::size_t i = 0; i < records.size(); ++i) {
    src.push_back(records[i].src_text);
    tgt.push_back(i % 11 == 0 ? records[(i + 1) % records.size()].tgt_text : records[i].tgt_text);
  }
  DatasetManifest m;
  m.entries.push_back(write_dataset(in, "synthetic.en-id", src, tgt));
  m.profiles_dir = profiles_dir();

  std::string first_src, first_audit, first_report;
  for (std::size_t workers : {1u, 4u, 8u}) {
    TempDir out;
    RunOptions opts;
    opts.output_dir = out.path();
    opts.pipeline.workers = workers;
    opts.pipeline.batch_size = 700;
    const PipelineResult r = run_pipeline(m, opts);
    ASSERT_TRUE(r.ok());
    const std::string s = read_file(filtered_path(out.path(), "synthetic.en-id", LanguageCode("en")));
    const std::string a = read_file(r.audit_path);
    const std::string rep = read_file(r.report_path);
    if (workers == 1) {
      first_src = s;
      first_audit = a;
      first_report = rep;
      EXPECT_GT(r.total.total_removed(), 0u);
    } else {
      EXPECT_EQ(s, first_src);
      EXPECT_EQ(a, first_audit);
      EXPECT_EQ(rep, first_report);
    }
  }
}

TEST(RunPipeline, KeptRecordsKeepTheirOrder) {
  TempDir in, out;
  DatasetManifest m;
  m.entries.push_back(write_dataset(in, "d", {"one", "Open 3", "two", "three"},
                                    {"satu", "Buka 4", "dua", "tiga"}));
  m.entries.back().config.enabled.erase(FilterKind::kLanguage);
  RunOptions opts;
  opts.output_dir = out.path();
  ASSERT_TRUE(run_pipeline(m, opts).ok());
  EXPECT_EQ(read_file(out / "d.en"), "one\ntwo\nthree\n");
  EXPECT_EQ(read_file(out / "d.id"), "satu\ndua\ntiga\n");
}

TEST(RunPipeline, FailingDatasetIsIsolated) {
  TempDir in, out;
  DatasetManifest m;
  m.entries.push_back(write_dataset(in, "good", {"one", "two"}, {"satu", "dua"}));
  m.entries.push_back(write_dataset(in, "bad", {"one", "two", "three"}, {"satu", "dua"}));
  m.entries.push_back(write_dataset(in, "good2", {"four"}, {"empat"}));
  for (auto& e : m.entries) e.config.enabled.erase(FilterKind::kLanguage);
  RunOptions opts;
  opts.output_dir = out.path();
  const PipelineResult r = run_pipeline(m, opts);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].dataset_id, "bad");
  EXPECT_EQ(r.failures[0].code, ErrorCode::kLineCountMismatch);
  ASSERT_EQ(r.datasets.size(), 2u);
  EXPECT_EQ(r.total.before, 3u);
  EXPECT_FALSE(fs::exists(out / "bad.en"));
  EXPECT_FALSE(fs::exists(out / "bad.id"));
  EXPECT_TRUE(fs::exists(out / "good2.en"));
  EXPECT_TRUE(fs::exists(out / "report.tsv"));
  for (const auto& entry : fs::directory_iterator(out.path())) {
    EXPECT_EQ(entry.path().string().find(".part"), std::string::npos);
  }
}

TEST(RunPipeline, MissingProfilesFailOnlyLanguageDatasets) {
  TempDir in, out;
  DatasetManifest m;
  m.entries.push_back(write_dataset(in, "needs", {"one"}, {"satu"}));
  m.entries.push_back(write_dataset(in, "plain", {"one"}, {"satu"}));
  m.entries.back().config.enabled.erase(FilterKind::kLanguage);
  RunOptions opts;
  opts.output_dir = out.path();
  const PipelineResult r = run_pipeline(m, opts);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].dataset_id, "needs");
  EXPECT_EQ(r.failures[0].code, ErrorCode::kNoProfiles);
  EXPECT_EQ(r.datasets.size(), 1u);
}

}  // namespace
}  // namespace bitext

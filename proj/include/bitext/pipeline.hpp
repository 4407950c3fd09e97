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

// Runs the filters over each dataset of a manifest.
//
// Per-record filters always run in the canonical order
//   empty -> length -> symbol -> keyword -> language -> script -> number
// and the dedup pass runs last over whatever survived. The first filter that
// rejects a record claims it, so removal counts depend on this order.
// Records are processed in batches; the per-record stage fans out across
// workers, while dedup and all writes stay sequential in line order. Output
// bytes therefore never depend on the worker count.

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/content.hpp"
#include "bitext/dedup.hpp"
#include "bitext/io.hpp"
#include "bitext/langscript.hpp"
#include "bitext/stats.hpp"
#include "bitext/types.hpp"

namespace bitext {

enum class FilterKind : std::uint8_t {
  kLength,
  kSymbol,
  kKeyword,
  kLanguage,
  kScript,
  kNumber,
  kDedup,
};

inline constexpr std::array<FilterKind, 7> kCanonicalFilterOrder = {
    FilterKind::kLength,   FilterKind::kSymbol, FilterKind::kKeyword,
    FilterKind::kLanguage, FilterKind::kScript, FilterKind::kNumber,
    FilterKind::kDedup,
};

std::string_view to_string(FilterKind kind);
std::optional<FilterKind> parse_filter_kind(std::string_view name);

class FilterSet {
 public:
  FilterSet() = default;
  FilterSet(std::initializer_list<FilterKind> kinds) {
    for (FilterKind k : kinds) insert(k);
  }
  static FilterSet all() {
    FilterSet s;
    for (FilterKind k : kCanonicalFilterOrder) s.insert(k);
    return s;
  }

  void insert(FilterKind k) { bits_ |= bit(k); }
  void erase(FilterKind k) { bits_ &= ~bit(k); }
  bool contains(FilterKind k) const { return (bits_ & bit(k)) != 0; }

  friend bool operator==(const FilterSet&, const FilterSet&) = default;

 private:
  static std::uint32_t bit(FilterKind k) { return 1u << static_cast<unsigned>(k); }
  std::uint32_t bits_ = 0;
};

struct DatasetConfig {
  FilterSet enabled = FilterSet::all();
  DedupConfig dedup;
  LangScriptConfig langscript;
  ContentConfig content;
};

// The stateless part of the chain. `detector` may be null only when the
// language filter is disabled.
class RecordFilter {
 public:
  RecordFilter(const DatasetConfig& config, const LanguageDetector* detector);

  Verdict operator()(const BitextRecord& record) const;

 private:
  DatasetConfig config_;
  const LanguageDetector* detector_;
};

struct PipelineOptions {
  std::size_t workers = 1;
  std::size_t batch_size = 8192;
};

// Verdicts for one dataset held in memory, in input order.
std::vector<Verdict> filter_records(std::span<const BitextRecord> records,
                                    const DatasetConfig& config,
                                    const LanguageDetector* detector,
                                    const PipelineOptions& options = {});

FilterStats tally(std::string dataset_id, std::string lang_pair,
                  std::span<const Verdict> verdicts);

struct DatasetEntry {
  FilePairSource source;
  DatasetConfig config;
};

struct DatasetManifest {
  std::vector<DatasetEntry> entries;
  std::filesystem::path output_dir;
  std::filesystem::path profiles_dir;  // may be empty when no dataset needs it
};

struct RunOptions {
  PipelineOptions pipeline;
  // Empty paths fall back to the manifest's directories:
  // output_dir/report.tsv and output_dir/audit.tsv.
  std::filesystem::path output_dir;
  std::filesystem::path report_path;
  std::filesystem::path audit_path;
  std::filesystem::path profiles_dir;
};

struct DatasetFailure {
  std::string dataset_id;
  ErrorCode code = ErrorCode::kIo;
  std::string message;
};

struct PipelineResult {
  std::vector<FilterStats> datasets;  // successful datasets, manifest order
  FilterStats total;
  std::vector<DatasetFailure> failures;
  std::filesystem::path report_path;
  std::filesystem::path audit_path;

  bool ok() const { return failures.empty(); }
  // Dataset rows followed by the TOTAL row.
  std::vector<FilterStats> report_rows() const;
};

// Filtered pairs go to <output_dir>/<dataset_id>.<lang>. A dataset that fails
// leaves no outputs behind and does not stop the others.
PipelineResult run_pipeline(const DatasetManifest& manifest,
                            const RunOptions& options = {});

std::filesystem::path filtered_path(const std::filesystem::path& output_dir,
                                    const std::string& dataset_id,
                                    LanguageCode lang);

}  // namespace bitext

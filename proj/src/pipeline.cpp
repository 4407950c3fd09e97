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

#include "bitext/pipeline.hpp"

#include <oneapi/tbb/blocked_range.h>
#include <oneapi/tbb/parallel_for.h>
#include <oneapi/tbb/task_arena.h>

#include <fstream>
#include <memory>

#include "bitext/text.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;

// Runs the chain batch by batch. Verdicts and dedup state depend only on the
// record sequence.
class DatasetRunner {
 public:
  DatasetRunner(const DatasetConfig& config, const LanguageDetector* detector,
                const PipelineOptions& options)
      : chain_(config, detector),
        workers_(options.workers == 0 ? 1 : options.workers) {
    if (config.enabled.contains(FilterKind::kDedup)) dedup_.emplace(config.dedup);
    if (workers_ > 1) arena_ = std::make_unique<tbb::task_arena>(static_cast<int>(workers_));
  }

  void process(std::span<const BitextRecord> batch, std::vector<Verdict>& verdicts) {
    const std::size_t n = batch.size();
    verdicts.assign(n, Verdict::keep());
    norm_src_.assign(n, {});
    norm_tgt_.assign(n, {});

    auto stage = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        verdicts[i] = chain_(batch[i]);
        if (dedup_ && verdicts[i].kept()) {
          norm_src_[i] = normalize_text(batch[i].src_text);
          norm_tgt_[i] = normalize_text(batch[i].tgt_text);
        }
      }
    };
    if (arena_) {
      arena_->execute([&] {
        tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n, 256),
                          [&](const tbb::blocked_range<std::size_t>& r) {
                            stage(r.begin(), r.end());
                          });
      });
    } else {
      stage(0, n);
    }

    if (!dedup_) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (verdicts[i].kept()) {
        verdicts[i] = dedup_->check_normalized(std::move(norm_src_[i]),
                                               std::move(norm_tgt_[i]));
      }
    }
  }

 private:
  RecordFilter chain_;
  std::optional<Deduplicator> dedup_;
  std::size_t workers_;
  std::unique_ptr<tbb::task_arena> arena_;
  std::vector<std::string> norm_src_;
  std::vector<std::string> norm_tgt_;
};

std::string lang_pair_of(const FilePairSource& source) {
  return source.src_lang.str() + "-" + source.tgt_lang.str();
}

bool needs_profiles(const DatasetManifest& manifest) {
  for (const DatasetEntry& e : manifest.entries) {
    if (e.config.enabled.contains(FilterKind::kLanguage)) return true;
  }
  return false;
}

void append_file(std::ofstream& out, const fs::path& part) {
  // Streaming an empty buffer would set failbit on `out`.
  if (fs::file_size(part) == 0) return;
  std::ifstream in(part, std::ios::binary);
  if (!in) throw BitextError(ErrorCode::kIo, "cannot reopen '" + part.string() + "'");
  out << in.rdbuf();
  if (!out) throw BitextError(ErrorCode::kIo, "audit write failed");
}

void remove_quietly(const fs::path& p) {
  std::error_code ec;
  fs::remove(p, ec);
}

FilterStats run_dataset(const DatasetEntry& entry, const LanguageDetector* detector,
                        const fs::path& output_dir, const fs::path& audit_part,
                        const PipelineOptions& options) {
  const FilePairSource& source = entry.source;
  FilterStats stats;
  stats.dataset_id = source.dataset_id;
  stats.lang_pair = lang_pair_of(source);

  BitextReader reader(source);
  BitextWriter writer(filtered_path(output_dir, source.dataset_id, source.src_lang),
                      filtered_path(output_dir, source.dataset_id, source.tgt_lang));
  std::ofstream audit(audit_part, std::ios::binary | std::ios::trunc);
  if (!audit) {
    throw BitextError(ErrorCode::kIo, "cannot write '" + audit_part.string() + "'");
  }

  DatasetRunner runner(entry.config, detector, options);
  std::vector<BitextRecord> batch;
  std::vector<Verdict> verdicts;
  const std::size_t batch_size = options.batch_size == 0 ? 1 : options.batch_size;
  while (reader.next_batch(batch, batch_size)) {
    runner.process(batch, verdicts);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++stats.before;
      if (verdicts[i].kept()) {
        writer.write(batch[i]);
        ++stats.after;
      } else {
        ++stats.removed(verdicts[i].reason());
        write_audit_line(audit, batch[i], verdicts[i]);
      }
    }
  }
  writer.close();
  audit.flush();
  if (!audit) throw BitextError(ErrorCode::kIo, "write failed on '" + audit_part.string() + "'");
  check_conservation(stats);
  return stats;
}

}  // namespace

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::kLength: return "length";
    case FilterKind::kSymbol: return "symbol";
    case FilterKind::kKeyword: return "keyword";
    case FilterKind::kLanguage: return "language";
    case FilterKind::kScript: return "script";
    case FilterKind::kNumber: return "number";
    case FilterKind::kDedup: return "dedup";
  }
  return "";
}

std::optional<FilterKind> parse_filter_kind(std::string_view name) {
  for (FilterKind k : kCanonicalFilterOrder) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

RecordFilter::RecordFilter(const DatasetConfig& config, const LanguageDetector* detector)
    : config_(config), detector_(detector) {
  if (config_.enabled.contains(FilterKind::kLanguage) && detector_ == nullptr) {
    throw BitextError(ErrorCode::kNoProfiles,
                      "language filter enabled but no language profiles loaded");
  }
}

Verdict RecordFilter::operator()(const BitextRecord& record) const {
  const FilterSet& on = config_.enabled;
  Verdict v = empty_filter(record);
  if (v.removed()) return v;
  if (on.contains(FilterKind::kLength) && (v = length_filter(record, config_.content)).removed()) {
    return v;
  }
  if (on.contains(FilterKind::kSymbol) && (v = symbol_filter(record, config_.content)).removed()) {
    return v;
  }
  if (on.contains(FilterKind::kKeyword) &&
      (v = keyword_filter(record, config_.content)).removed()) {
    return v;
  }
  if (on.contains(FilterKind::kLanguage) &&
      (v = language_filter(record, *detector_, config_.langscript)).removed()) {
    return v;
  }
  if (on.contains(FilterKind::kScript) &&
      (v = script_filter(record, config_.langscript)).removed()) {
    return v;
  }
  if (on.contains(FilterKind::kNumber) && (v = number_filter(record, config_.content)).removed()) {
    return v;
  }
  return Verdict::keep();
}

std::vector<Verdict> filter_records(std::span<const BitextRecord> records,
                                    const DatasetConfig& config,
                                    const LanguageDetector* detector,
                                    const PipelineOptions& options) {
  DatasetRunner runner(config, detector, options);
  std::vector<Verdict> all;
  all.reserve(records.size());
  std::vector<Verdict> verdicts;
  const std::size_t batch_size = options.batch_size == 0 ? 1 : options.batch_size;
  for (std::size_t start = 0; start < records.size(); start += batch_size) {
    const std::size_t len = std::min(batch_size, records.size() - start);
    runner.process(records.subspan(start, len), verdicts);
    for (Verdict& v : verdicts) all.push_back(std::move(v));
  }
  return all;
}

FilterStats tally(std::string dataset_id, std::string lang_pair,
                  std::span<const Verdict> verdicts) {
  FilterStats stats;
  stats.dataset_id = std::move(dataset_id);
  stats.lang_pair = std::move(lang_pair);
  for (const Verdict& v : verdicts) {
    ++stats.before;
    if (v.kept()) {
      ++stats.after;
    } else {
      ++stats.removed(v.reason());
    }
  }
  return stats;
}

std::vector<FilterStats> PipelineResult::report_rows() const {
  std::vector<FilterStats> rows = datasets;
  rows.push_back(total);
  return rows;
}

fs::path filtered_path(const fs::path& output_dir, const std::string& dataset_id,
                       LanguageCode lang) {
  return output_dir / (dataset_id + "." + lang.str());
}

PipelineResult run_pipeline(const DatasetManifest& manifest, const RunOptions& options) {
  const fs::path output_dir =
      options.output_dir.empty() ? manifest.output_dir : options.output_dir;
  const fs::path profiles_dir =
      options.profiles_dir.empty() ? manifest.profiles_dir : options.profiles_dir;
  PipelineResult result;
  result.report_path =
      options.report_path.empty() ? output_dir / "report.tsv" : options.report_path;
  result.audit_path =
      options.audit_path.empty() ? output_dir / "audit.tsv" : options.audit_path;

  fs::create_directories(output_dir);
  if (result.audit_path.has_parent_path()) {
    fs::create_directories(result.audit_path.parent_path());
  }

  std::vector<LangProfile> profiles;
  std::optional<BitextError> profile_error;
  if (needs_profiles(manifest)) {
    try {
      if (profiles_dir.empty()) {
        throw BitextError(ErrorCode::kNoProfiles, "no profiles directory configured");
      }
      profiles = load_profiles_dir(profiles_dir);
    } catch (const BitextError& e) {
      profile_error = e;
    }
  }

  std::ofstream audit(result.audit_path, std::ios::binary | std::ios::trunc);
  if (!audit) {
    throw BitextError(ErrorCode::kIo, "cannot write audit '" + result.audit_path.string() + "'");
  }

  for (const DatasetEntry& entry : manifest.entries) {
    const std::string& id = entry.source.dataset_id;
    const fs::path out_src = filtered_path(output_dir, id, entry.source.src_lang);
    const fs::path out_tgt = filtered_path(output_dir, id, entry.source.tgt_lang);
    const fs::path audit_part = output_dir / ("." + id + ".audit.part");
    try {
      std::optional<LanguageDetector> detector;
      if (entry.config.enabled.contains(FilterKind::kLanguage)) {
        if (profile_error) throw *profile_error;
        detector.emplace(profiles, DetectorOptions::from_config(entry.config.langscript));
      }
      FilterStats stats = run_dataset(entry, detector ? &*detector : nullptr, output_dir,
                                      audit_part, options.pipeline);
      append_file(audit, audit_part);
      remove_quietly(audit_part);
      result.datasets.push_back(std::move(stats));
    } catch (const BitextError& e) {
      result.failures.push_back({id, e.code(), e.what()});
    } catch (const std::filesystem::filesystem_error& e) {
      result.failures.push_back({id, ErrorCode::kIo, e.what()});
    }
    if (!result.failures.empty() && result.failures.back().dataset_id == id) {
      remove_quietly(out_src);
      remove_quietly(out_tgt);
      remove_quietly(audit_part);
    }
  }
  audit.flush();
  if (!audit) {
    throw BitextError(ErrorCode::kIo, "write failed on '" + result.audit_path.string() + "'");
  }

  result.total = merge_stats(result.datasets);
  check_conservation(result.total);
  write_report(result.report_rows(), result.report_path);
  return result;
}

}  // namespace bitext

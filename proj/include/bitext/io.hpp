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

// Reading aligned file pairs and writing filtered outputs, audit logs and
// reduction reports.

#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitext/stats.hpp"
#include "bitext/types.hpp"

namespace bitext {

struct FilePairSource {
  std::filesystem::path src_path;
  std::filesystem::path tgt_path;
  LanguageCode src_lang{"en"};
  LanguageCode tgt_lang{"id"};
  std::string dataset_id;
};

// Streams records from a file pair in file order. Lines may end in "\n" or
// "\r\n"; a missing final newline is accepted. Throws BitextError with
// kLineCountMismatch (once either file runs out early, after counting the
// rest of the longer one), kInvalidUtf8 or kIo.
class BitextReader {
 public:
  explicit BitextReader(FilePairSource source);

  std::optional<BitextRecord> next();

  // Fills `out` with up to `max_records` records; returns false at end.
  bool next_batch(std::vector<BitextRecord>& out, std::size_t max_records);

  const FilePairSource& source() const { return source_; }

 private:
  [[noreturn]] void fail_mismatch(bool src_ended);

  FilePairSource source_;
  std::ifstream src_;
  std::ifstream tgt_;
  std::size_t line_no_ = 0;
};

std::vector<BitextRecord> read_bitext(const FilePairSource& source);

// Reads one newline-delimited UTF-8 file (same line rules as BitextReader).
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes the original record text, one line per record, each terminated by
// exactly one "\n".
class BitextWriter {
 public:
  BitextWriter(const std::filesystem::path& src_path,
               const std::filesystem::path& tgt_path);

  void write(const BitextRecord& record);
  std::size_t lines_written() const { return lines_; }
  void close();

 private:
  std::filesystem::path src_path_;
  std::filesystem::path tgt_path_;
  std::ofstream src_;
  std::ofstream tgt_;
  std::size_t lines_ = 0;
};

std::pair<std::size_t, std::size_t> write_bitext(
    std::span<const BitextRecord> records,
    const std::filesystem::path& out_src_path,
    const std::filesystem::path& out_tgt_path);

// Backslash, tab, CR and LF become \\, \t, \r and \n.
std::string escape_tsv_field(std::string_view text);
std::string unescape_tsv_field(std::string_view text);

// One audit line: dataset_id, line_no, reason, filter_name, src_text,
// tgt_text, tab-separated, newline-terminated.
void write_audit_line(std::ostream& out, const BitextRecord& record,
                      const Verdict& verdict);

void write_audit(std::span<const std::pair<BitextRecord, Verdict>> removals,
                 const std::filesystem::path& path);

struct AuditEntry {
  std::string dataset_id;
  std::size_t line_no = 0;
  ReasonCode reason = ReasonCode::kNone;
  std::string filter_name;
  std::string src_text;
  std::string tgt_text;
};

std::vector<AuditEntry> read_audit(const std::filesystem::path& path);

// Reason codes that get a report column (every code except NONE).
std::span<const ReasonCode> report_reasons();

void write_report(std::ostream& out, std::span<const FilterStats> stats);
void write_report(std::span<const FilterStats> stats,
                  const std::filesystem::path& path);

// Human-readable table shaped like a "before / after / reduction" summary,
// with thousands separators.
void print_report_table(std::ostream& out, std::span<const FilterStats> stats);

// "54075891" -> "54,075,891".
std::string group_thousands(std::uint64_t value);

}  // namespace bitext

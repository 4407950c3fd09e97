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

#include "bitext/io.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <map>
#include <sstream>

#include "bitext/text.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::size_t count_remaining(std::istream& in) {
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

void open_for_read(std::ifstream& in, const fs::path& path) {
  in.open(path, std::ios::binary);
  if (!in) {
    throw BitextError(ErrorCode::kIo, "cannot open '" + path.string() +
                                          "' for reading");
  }
}

void open_for_write(std::ofstream& out, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  out.open(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw BitextError(ErrorCode::kIo, "cannot open '" + path.string() +
                                          "' for writing");
  }
}

void check_written(const std::ostream& out, const fs::path& path) {
  if (!out) {
    throw BitextError(ErrorCode::kIo, "write failed on '" + path.string() + "'");
  }
}

std::string_view language_name(std::string_view code) {
  static const std::map<std::string_view, std::string_view> kNames = {
      {"en", "English"},  {"id", "Indonesian"}, {"jv", "Javanese"},
      {"ms", "Malaysian"}, {"ta", "Tamil"},      {"tl", "Tagalog"},
  };
  auto it = kNames.find(code);
  return it == kNames.end() ? code : it->second;
}

std::string describe_pair(std::string_view lang_pair) {
  const auto dash = lang_pair.find('-');
  if (dash == std::string_view::npos) return std::string(lang_pair);
  return std::string(language_name(lang_pair.substr(0, dash))) + " - " +
         std::string(language_name(lang_pair.substr(dash + 1)));
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

BitextReader::BitextReader(FilePairSource source) : source_(std::move(source)) {
  open_for_read(src_, source_.src_path);
  open_for_read(tgt_, source_.tgt_path);
}

void BitextReader::fail_mismatch(bool src_ended) {
  const std::size_t shorter = line_no_;
  const std::size_t longer =
      line_no_ + 1 + count_remaining(src_ended ? tgt_ : src_);
  const std::size_t src_lines = src_ended ? shorter : longer;
  const std::size_t tgt_lines = src_ended ? longer : shorter;
  throw BitextError(ErrorCode::kLineCountMismatch,
                    "dataset '" + source_.dataset_id + "': line count mismatch: " +
                        source_.src_path.string() + " has " +
                        std::to_string(src_lines) + " lines, " +
                        source_.tgt_path.string() + " has " +
                        std::to_string(tgt_lines) + " lines");
}

std::optional<BitextRecord> BitextReader::next() {
  std::string src_line;
  std::string tgt_line;
  const bool has_src = read_line(src_, src_line);
  const bool has_tgt = read_line(tgt_, tgt_line);
  if (!has_src && !has_tgt) {
    if (src_.bad() || tgt_.bad()) {
      throw BitextError(ErrorCode::kIo,
                        "read error in dataset '" + source_.dataset_id + "'");
    }
    return std::nullopt;
  }
  if (has_src != has_tgt) fail_mismatch(/*src_ended=*/!has_src);

  ++line_no_;
  for (const auto* side : {&src_line, &tgt_line}) {
    if (!is_valid_utf8(*side)) {
      const fs::path& file =
          side == &src_line ? source_.src_path : source_.tgt_path;
      throw BitextError(ErrorCode::kInvalidUtf8,
                        "dataset '" + source_.dataset_id + "': invalid UTF-8 at " +
                            file.string() + ":" + std::to_string(line_no_));
    }
  }
  return BitextRecord{source_.dataset_id, line_no_,         source_.src_lang,
                      source_.tgt_lang,   std::move(src_line), std::move(tgt_line)};
}

bool BitextReader::next_batch(std::vector<BitextRecord>& out,
                              std::size_t max_records) {
  out.clear();
  while (out.size() < max_records) {
    auto record = next();
    if (!record) break;
    out.push_back(std::move(*record));
  }
  return !out.empty();
}

std::vector<BitextRecord> read_bitext(const FilePairSource& source) {
  BitextReader reader(source);
  std::vector<BitextRecord> records;
  while (auto record = reader.next()) records.push_back(std::move(*record));
  return records;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in;
  open_for_read(in, path);
  std::vector<std::string> lines;
  std::string line;
  while (read_line(in, line)) {
    if (!is_valid_utf8(line)) {
      throw BitextError(ErrorCode::kInvalidUtf8,
                        "invalid UTF-8 at " + path.string() + ":" +
                            std::to_string(lines.size() + 1));
    }
    lines.push_back(line);
  }
  return lines;
}

BitextWriter::BitextWriter(const fs::path& src_path, const fs::path& tgt_path)
    : src_path_(src_path), tgt_path_(tgt_path) {
  open_for_write(src_, src_path_);
  open_for_write(tgt_, tgt_path_);
}

void BitextWriter::write(const BitextRecord& record) {
  src_ << record.src_text << '\n';
  tgt_ << record.tgt_text << '\n';
  ++lines_;
}

void BitextWriter::close() {
  src_.flush();
  tgt_.flush();
  check_written(src_, src_path_);
  check_written(tgt_, tgt_path_);
  src_.close();
  tgt_.close();
}

std::pair<std::size_t, std::size_t> write_bitext(
    std::span<const BitextRecord> records, const fs::path& out_src_path,
    const fs::path& out_tgt_path) {
  BitextWriter writer(out_src_path, out_tgt_path);
  for (const BitextRecord& r : records) writer.write(r);
  writer.close();
  return {writer.lines_written(), writer.lines_written()};
}

std::string escape_tsv_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_tsv_field(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 == text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case '\\': out.push_back('\\'); break;
      default:
        out.push_back('\\');
        out.push_back(text[i]);
    }
  }
  return out;
}

void write_audit_line(std::ostream& out, const BitextRecord& record,
                      const Verdict& verdict) {
  out << escape_tsv_field(record.dataset_id) << '\t' << record.line_no << '\t'
      << to_string(verdict.reason()) << '\t' << verdict.filter_name() << '\t'
      << escape_tsv_field(record.src_text) << '\t'
      << escape_tsv_field(record.tgt_text) << '\n';
}

void write_audit(std::span<const std::pair<BitextRecord, Verdict>> removals,
                 const fs::path& path) {
  std::ofstream out;
  open_for_write(out, path);
  for (const auto& [record, verdict] : removals) {
    write_audit_line(out, record, verdict);
  }
  out.flush();
  check_written(out, path);
}

std::vector<AuditEntry> read_audit(const fs::path& path) {
  std::ifstream in;
  open_for_read(in, path);
  std::vector<AuditEntry> entries;
  std::string line;
  std::size_t n = 0;
  while (read_line(in, line)) {
    ++n;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    std::size_t line_no = 0;
    std::optional<ReasonCode> reason;
    bool ok = fields.size() == 6;
    if (ok) {
      const auto* end = fields[1].data() + fields[1].size();
      const auto [ptr, ec] = std::from_chars(fields[1].data(), end, line_no);
      reason = parse_reason(fields[2]);
      ok = ec == std::errc() && ptr == end && reason.has_value();
    }
    if (!ok) {
      throw BitextError(ErrorCode::kIo, "malformed audit line " +
                                            std::to_string(n) + " in " +
                                            path.string());
    }
    entries.push_back(AuditEntry{unescape_tsv_field(fields[0]), line_no, *reason,
                                 std::string(fields[3]),
                                 unescape_tsv_field(fields[4]),
                                 unescape_tsv_field(fields[5])});
  }
  return entries;
}

std::span<const ReasonCode> report_reasons() {
  static const std::vector<ReasonCode> kReasons(kAllReasons.begin() + 1,
                                                kAllReasons.end());
  return kReasons;
}

void write_report(std::ostream& out, std::span<const FilterStats> stats) {
  out << "dataset_id\tlang_pair\tbefore\tafter\treduction_pct";
  for (ReasonCode r : report_reasons()) out << '\t' << to_string(r);
  out << '\n';
  for (const FilterStats& s : stats) {
    out << s.dataset_id << '\t' << s.lang_pair << '\t' << s.before << '\t'
        << s.after << '\t' << format_reduction_pct(s.before, s.after);
    for (ReasonCode r : report_reasons()) out << '\t' << s.removed(r);
    out << '\n';
  }
}

void write_report(std::span<const FilterStats> stats, const fs::path& path) {
  std::ofstream out;
  open_for_write(out, path);
  write_report(out, stats);
  out.flush();
  check_written(out, path);
}

std::string group_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i % 3) == lead % 3) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

void print_report_table(std::ostream& out, std::span<const FilterStats> stats) {
  struct Row {
    std::string cells[6];
  };
  std::vector<Row> rows;
  rows.push_back({{"Dataset", "ISO", "Language Pair", "Before Preprocessing",
                   "After Preprocessing", "Reduction"}});
  for (const FilterStats& s : stats) {
    rows.push_back({{s.dataset_id, s.lang_pair, describe_pair(s.lang_pair),
                     group_thousands(s.before), group_thousands(s.after),
                     format_reduction_pct(s.before, s.after) + "%"}});
  }
  std::size_t widths[6] = {};
  for (const Row& row : rows) {
    for (int c = 0; c < 6; ++c) {
      widths[c] = std::max(widths[c], char_count(row.cells[c]));
    }
  }
  auto rule = [&] {
    for (int c = 0; c < 6; ++c) {
      out << (c == 0 ? "" : "-+-") << std::string(widths[c], '-');
    }
    out << '\n';
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 1 || (i + 1 == rows.size() && i > 1)) rule();
    for (int c = 0; c < 6; ++c) {
      const std::string& cell = rows[i].cells[c];
      const std::string pad(widths[c] - char_count(cell), ' ');
      out << (c == 0 ? "" : " | ");
      // Counts are right-aligned.
      if (c >= 3 && i > 0) {
        out << pad << cell;
      } else {
        out << cell << pad;
      }
    }
    out << '\n';
  }
}

}  // namespace bitext

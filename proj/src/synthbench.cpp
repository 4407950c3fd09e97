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

#include "bitext/synthbench.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "bitext/text.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;

// Order in which classes pick their records. DUP_INJECT goes last so its
// donors are chosen among records that are certain to stay clean.
constexpr std::array<CorruptionClass, 8> kFillOrder = {
    CorruptionClass::kOverlength,   CorruptionClass::kKeywordGlue,
    CorruptionClass::kNumberPerturb, CorruptionClass::kMisalign,
    CorruptionClass::kForeignSwap,  CorruptionClass::kCopySrc,
    CorruptionClass::kPartialEmbed, CorruptionClass::kDupInject,
};

bool is_dedup_class(CorruptionClass c) {
  return target_filter(c) == FilterKind::kDedup;
}

std::string rtrim_to_alnum(std::string_view text) {
  std::string norm = normalize_text(text);
  const auto* bytes = reinterpret_cast<const uint8_t*>(norm.data());
  auto end = static_cast<int32_t>(norm.size());
  while (end > 0) {
    int32_t prev = end;
    UChar32 c;
    U8_PREV(bytes, 0, prev, c);
    if (c >= 0 && (u_isalpha(c) || u_isdigit(c))) break;
    end = prev;
  }
  norm.resize(static_cast<std::size_t>(end));
  return norm;
}

bool ends_glueable(std::string_view norm) {
  if (norm.empty()) return false;
  const auto* bytes = reinterpret_cast<const uint8_t*>(norm.data());
  auto end = static_cast<int32_t>(norm.size());
  UChar32 c;
  U8_PREV(bytes, 0, end, c);
  return c >= 0 && (u_islower(c) || u_isdigit(c));
}

// Byte ranges of the ASCII digit runs in `text`.
std::vector<std::pair<std::size_t, std::size_t>> digit_runs(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] < '0' || text[i] > '9') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  return runs;
}

class Generator {
 public:
  Generator(std::span<const BitextRecord> clean, const CorruptionSpec& spec,
            std::span<const std::string> foreign, const GeneratorOptions& options)
      : clean_(clean), foreign_(foreign), options_(options), rng_(spec.seed) {}

  LabeledCorpus run(const CorruptionSpec& spec) {
    const std::size_t n = clean_.size();
    corpus_.records.assign(clean_.begin(), clean_.end());
    for (std::size_t i = 0; i < n; ++i) corpus_.records[i].line_no = i + 1;
    corpus_.labels.assign(n, std::nullopt);
    donor_.assign(n, false);

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
      std::swap(order_[i - 1], order_[uniform_below(rng_, i)]);
    }

    for (CorruptionClass c : kFillOrder) {
      auto it = spec.rates.find(c);
      const double rate = it == spec.rates.end() ? 0.0 : it->second;
      const auto want = static_cast<std::size_t>(std::floor(rate * static_cast<double>(n) + 1e-9));
      if (want == 0) continue;
      if (c == CorruptionClass::kForeignSwap && foreign_.empty()) {
        throw BitextError(ErrorCode::kMissingForeignCorpus,
                          "FOREIGN_SWAP requested but no foreign lines were supplied");
      }
      fill(c, want);
    }
    return std::move(corpus_);
  }

 private:
  void fill(CorruptionClass c, std::size_t want) {
    std::size_t got = 0;
    for (std::size_t idx : order_) {
      if (got == want) break;
      if (corpus_.labels[idx] || donor_[idx]) continue;
      std::optional<BitextRecord> corrupted = corrupt(c, idx);
      if (!corrupted) continue;
      corpus_.records[idx] = std::move(*corrupted);
      corpus_.labels[idx] = c;
      ++got;
    }
    if (got < want) {
      throw BitextError(ErrorCode::kInsufficientCleanRecords,
                        "only " + std::to_string(got) + " of " + std::to_string(want) +
                            " records eligible for " + std::string(to_string(c)));
    }
  }

  bool accepted(CorruptionClass c, const BitextRecord& r) const {
    if (!options_.stateless_check) return true;
    const Verdict v = options_.stateless_check(r);
    if (is_dedup_class(c)) return v.kept();
    return v.removed() && v.reason() == target_reason(c);
  }

  std::optional<BitextRecord> corrupt(CorruptionClass c, std::size_t idx) {
    const BitextRecord& orig = clean_[idx];
    BitextRecord r = corpus_.records[idx];
    const ContentConfig& content = options_.content;
    switch (c) {
      case CorruptionClass::kMisalign: {
        r.tgt_text = clean_[(idx + 1) % clean_.size()].tgt_text;
        if (extract_numbers(r.src_text) == extract_numbers(r.tgt_text)) return std::nullopt;
        break;
      }
      case CorruptionClass::kDupInject: {
        if (idx == 0) return std::nullopt;
        std::optional<std::size_t> donor;
        for (int attempt = 0; attempt < 16 && !donor; ++attempt) {
          const std::size_t j = uniform_below(rng_, idx);
          if (!corpus_.labels[j]) donor = j;
        }
        if (!donor) return std::nullopt;
        r.src_text = clean_[*donor].src_text;
        r.tgt_text = clean_[*donor].tgt_text;
        if (!accepted(c, r)) return std::nullopt;
        donor_[*donor] = true;
        return r;
      }
      case CorruptionClass::kCopySrc: {
        r.tgt_text = orig.src_text;
        if (!options_.dedup.enable_identical) return std::nullopt;
        break;
      }
      case CorruptionClass::kPartialEmbed: {
        const std::string src = normalize_text(orig.src_text);
        if (char_count(src) < options_.dedup.partial_min_chars) return std::nullopt;
        if (!extract_numbers(src).empty()) return std::nullopt;
        r.tgt_text = normalize_text(orig.tgt_text) + " " + src;
        if (char_count(r.tgt_text) > content.max_chars) return std::nullopt;
        if (!is_partial_duplicate(r, options_.dedup)) return std::nullopt;
        break;
      }
      case CorruptionClass::kKeywordGlue: {
        if (content.keywords.empty()) return std::nullopt;
        const std::string base = rtrim_to_alnum(orig.tgt_text);
        if (!ends_glueable(base)) return std::nullopt;
        const std::string& kw =
            content.keywords[uniform_below(rng_, content.keywords.size())];
        r.tgt_text = base + kw;
        if (char_count(r.tgt_text) > content.max_chars) return std::nullopt;
        break;
      }
      case CorruptionClass::kNumberPerturb: {
        const auto runs = digit_runs(orig.tgt_text);
        if (runs.empty()) return std::nullopt;
        const auto [begin, end] = runs[uniform_below(rng_, runs.size())];
        const std::size_t pos = begin + uniform_below(rng_, end - begin);
        const int old_digit = orig.tgt_text[pos] - '0';
        const int new_digit =
            static_cast<int>((old_digit + 1 + static_cast<int>(uniform_below(rng_, 9))) % 10);
        r.tgt_text = orig.tgt_text;
        r.tgt_text[pos] = static_cast<char>('0' + new_digit);
        if (extract_numbers(r.src_text) == extract_numbers(r.tgt_text)) return std::nullopt;
        break;
      }
      case CorruptionClass::kForeignSwap: {
        // Try a few foreign lines for this record before giving up on it.
        for (int attempt = 0; attempt < 8; ++attempt) {
          r.tgt_text = foreign_[foreign_cursor_++ % foreign_.size()];
          if (accepted(c, r)) return r;
        }
        return std::nullopt;
      }
      case CorruptionClass::kOverlength: {
        const std::string unit = normalize_text(orig.tgt_text);
        if (unit.empty()) return std::nullopt;
        std::string inflated = unit;
        while (char_count(inflated) <= content.max_chars) inflated += " " + unit;
        r.tgt_text = std::move(inflated);
        break;
      }
    }
    if (!accepted(c, r)) return std::nullopt;
    return r;
  }

  std::span<const BitextRecord> clean_;
  std::span<const std::string> foreign_;
  const GeneratorOptions& options_;
  std::mt19937_64 rng_;
  LabeledCorpus corpus_;
  std::vector<std::size_t> order_;
  std::vector<bool> donor_;
  std::size_t foreign_cursor_ = 0;
};

std::string format_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::size_t class_index(const Label& label) {
  return label ? static_cast<std::size_t>(*label) + 1 : 0;
}

}  // namespace

std::string_view to_string(CorruptionClass c) {
  switch (c) {
    case CorruptionClass::kMisalign: return "MISALIGN";
    case CorruptionClass::kDupInject: return "DUP_INJECT";
    case CorruptionClass::kCopySrc: return "COPY_SRC";
    case CorruptionClass::kPartialEmbed: return "PARTIAL_EMBED";
    case CorruptionClass::kKeywordGlue: return "KEYWORD_GLUE";
    case CorruptionClass::kNumberPerturb: return "NUMBER_PERTURB";
    case CorruptionClass::kForeignSwap: return "FOREIGN_SWAP";
    case CorruptionClass::kOverlength: return "OVERLENGTH";
  }
  return "";
}

std::optional<CorruptionClass> parse_corruption(std::string_view name) {
  for (CorruptionClass c : kAllCorruptions) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

ReasonCode target_reason(CorruptionClass c) {
  switch (c) {
    case CorruptionClass::kMisalign: return ReasonCode::kNumberMismatch;
    case CorruptionClass::kDupInject: return ReasonCode::kDupPair;
    case CorruptionClass::kCopySrc: return ReasonCode::kDupIdentical;
    case CorruptionClass::kPartialEmbed: return ReasonCode::kDupPartial;
    case CorruptionClass::kKeywordGlue: return ReasonCode::kKeyword;
    case CorruptionClass::kNumberPerturb: return ReasonCode::kNumberMismatch;
    case CorruptionClass::kForeignSwap: return ReasonCode::kLangForeign;
    case CorruptionClass::kOverlength: return ReasonCode::kTooLong;
  }
  return ReasonCode::kNone;
}

FilterKind target_filter(CorruptionClass c) {
  switch (c) {
    case CorruptionClass::kMisalign:
    case CorruptionClass::kNumberPerturb: return FilterKind::kNumber;
    case CorruptionClass::kDupInject:
    case CorruptionClass::kCopySrc:
    case CorruptionClass::kPartialEmbed: return FilterKind::kDedup;
    case CorruptionClass::kKeywordGlue: return FilterKind::kKeyword;
    case CorruptionClass::kForeignSwap: return FilterKind::kLanguage;
    case CorruptionClass::kOverlength: return FilterKind::kLength;
  }
  return FilterKind::kDedup;
}

void validate(const CorruptionSpec& spec) {
  double sum = 0.0;
  for (const auto& [c, rate] : spec.rates) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw BitextError(ErrorCode::kInvalidArgument,
                        "rate for " + std::string(to_string(c)) + " must be in [0, 1]");
    }
    sum += rate;
  }
  if (sum > 1.0 + 1e-12) {
    throw BitextError(ErrorCode::kInvalidArgument, "corruption rates sum to more than 1");
  }
}

std::string label_name(const Label& label) {
  return label ? std::string(to_string(*label)) : "CLEAN";
}

std::optional<Label> parse_label(std::string_view name) {
  if (name == "CLEAN") return Label{};
  if (auto c = parse_corruption(name)) return Label{*c};
  return std::nullopt;
}

LabeledCorpus generate(std::span<const BitextRecord> clean, const CorruptionSpec& spec,
                       std::span<const std::string> foreign, const GeneratorOptions& options) {
  validate(spec);
  Generator gen(clean, spec, foreign, options);
  return gen.run(spec);
}

double ClassMetrics::recall() const {
  return labeled == 0 ? 1.0 : static_cast<double>(removed) / static_cast<double>(labeled);
}

double ClassMetrics::target_recall() const {
  return labeled == 0 ? 1.0
                      : static_cast<double>(removed_by_target) / static_cast<double>(labeled);
}

double ReasonMetrics::precision() const {
  return removed == 0 ? 1.0 : static_cast<double>(matched) / static_cast<double>(removed);
}

const ClassMetrics& EvalReport::for_label(const Label& label) const {
  return classes.at(class_index(label));
}

const ReasonMetrics& EvalReport::for_reason(ReasonCode reason) const {
  return reasons.at(static_cast<std::size_t>(reason) - 1);
}

double EvalReport::clean_false_removal_rate() const {
  const ClassMetrics& clean = for_label(std::nullopt);
  return clean.labeled == 0
             ? 0.0
             : static_cast<double>(clean.removed) / static_cast<double>(clean.labeled);
}

EvalReport evaluate(const LabeledCorpus& corpus, std::span<const Verdict> verdicts) {
  if (verdicts.size() != corpus.records.size()) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "evaluate: " + std::to_string(verdicts.size()) + " verdicts for " +
                          std::to_string(corpus.records.size()) + " records");
  }
  EvalReport report;
  report.classes.push_back({std::nullopt});
  for (CorruptionClass c : kAllCorruptions) report.classes.push_back({c});
  for (std::size_t r = 1; r < kReasonCount; ++r) {
    report.reasons.push_back({static_cast<ReasonCode>(r)});
  }

  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Label& label = corpus.labels[i];
    const Verdict& v = verdicts[i];
    ClassMetrics& cm = report.classes[class_index(label)];
    ++cm.labeled;
    ++report.confusion[{label_name(label), v.reason()}];
    if (!v.removed()) continue;
    ++cm.removed;
    ReasonMetrics& rm = report.reasons[static_cast<std::size_t>(v.reason()) - 1];
    ++rm.removed;
    if (label && target_reason(*label) == v.reason()) {
      ++cm.removed_by_target;
      ++rm.matched;
    }
  }
  return report;
}

void write_labels(const LabeledCorpus& corpus, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << "line_no\tlabel\n";
  for (std::size_t i = 0; i < corpus.labels.size(); ++i) {
    out << corpus.records[i].line_no << '\t' << label_name(corpus.labels[i]) << '\n';
  }
  out.flush();
  if (!out) throw BitextError(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

std::vector<Label> read_labels(const fs::path& path) {
  std::vector<Label> labels;
  std::size_t n = 0;
  for (const std::string& line : read_lines(path)) {
    ++n;
    if (n == 1 && line == "line_no\tlabel") continue;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    std::size_t line_no = 0;
    std::optional<Label> label;
    if (tab != std::string::npos) {
      const auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, line_no);
      if (ec == std::errc() && ptr == line.data() + tab) {
        label = parse_label(std::string_view(line).substr(tab + 1));
      }
    }
    if (!label || line_no != labels.size() + 1) {
      throw BitextError(ErrorCode::kIo, path.string() + ":" + std::to_string(n) +
                                            ": expected \"<line_no>\\t<label>\" in order");
    }
    labels.push_back(*label);
  }
  return labels;
}

void write_metrics(std::ostream& out, const EvalReport& report) {
  out << "class\ttarget_reason\tlabeled\tremoved\tremoved_by_target\trecall\ttarget_recall"
         "\tprecision\tfalse_removal_rate\n";
  for (const ClassMetrics& cm : report.classes) {
    out << label_name(cm.label) << '\t';
    if (!cm.label) {
      out << "NONE\t" << cm.labeled << '\t' << cm.removed << "\t0\t-\t-\t-\t"
          << format_ratio(report.clean_false_removal_rate()) << '\n';
      continue;
    }
    const ReasonCode reason = target_reason(*cm.label);
    out << to_string(reason) << '\t' << cm.labeled << '\t' << cm.removed << '\t'
        << cm.removed_by_target << '\t' << format_ratio(cm.recall()) << '\t'
        << format_ratio(cm.target_recall()) << '\t'
        << format_ratio(report.for_reason(reason).precision()) << "\t-\n";
  }
}

void write_metrics(const EvalReport& report, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  write_metrics(out, report);
  out.flush();
  if (!out) throw BitextError(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

namespace {

using Slot = std::array<std::pair<const char*, const char*>, 20>;

constexpr Slot kSubjects = {{
    {"My sister", "Kakak perempuan saya"}, {"The teacher", "Guru itu"},
    {"Our neighbour", "Tetangga kami"}, {"The old farmer", "Petani tua itu"},
    {"The young doctor", "Dokter muda itu"}, {"My grandfather", "Kakek saya"},
    {"The shop owner", "Pemilik toko itu"}, {"Their youngest son", "Anak bungsu mereka"},
    {"The village head", "Kepala desa"}, {"A quiet student", "Seorang siswa pendiam"},
    {"The fisherman", "Nelayan itu"}, {"My best friend", "Sahabat saya"},
    {"The new driver", "Sopir baru itu"}, {"Her husband", "Suaminya"},
    {"The librarian", "Pustakawan itu"}, {"The little girl", "Gadis kecil itu"},
    {"Our manager", "Manajer kami"}, {"The tailor", "Penjahit itu"},
    {"My uncle", "Paman saya"}, {"The police officer", "Polisi itu"},
}};

constexpr Slot kVerbs = {{
    {"bought", "membeli"}, {"carried", "membawa"}, {"painted", "mengecat"},
    {"cleaned", "membersihkan"}, {"found", "menemukan"}, {"repaired", "memperbaiki"},
    {"sold", "menjual"}, {"borrowed", "meminjam"}, {"washed", "mencuci"},
    {"hid", "menyembunyikan"}, {"moved", "memindahkan"}, {"checked", "memeriksa"},
    {"wrapped", "membungkus"}, {"photographed", "memotret"}, {"ordered", "memesan"},
    {"returned", "mengembalikan"}, {"measured", "mengukur"}, {"guarded", "menjaga"},
    {"opened", "membuka"}, {"lifted", "mengangkat"},
}};

constexpr Slot kObjects = {{
    {"a blue bicycle", "sebuah sepeda biru"}, {"the wooden table", "meja kayu itu"},
    {"an old radio", "sebuah radio tua"}, {"a basket of mangoes", "sekeranjang mangga"},
    {"the broken window", "jendela yang rusak"}, {"a red umbrella", "sebuah payung merah"},
    {"the heavy box", "kotak yang berat"}, {"a new laptop", "sebuah laptop baru"},
    {"the green door", "pintu hijau itu"}, {"a bag of rice", "sekarung beras"},
    {"the kitchen lamp", "lampu dapur"}, {"a small boat", "sebuah perahu kecil"},
    {"the school bus", "bus sekolah"}, {"a silver ring", "sebuah cincin perak"},
    {"the garden fence", "pagar kebun"}, {"a leather wallet", "sebuah dompet kulit"},
    {"the family car", "mobil keluarga"}, {"a bamboo chair", "sebuah kursi bambu"},
    {"the clay pot", "periuk tanah liat"}, {"a pair of shoes", "sepasang sepatu"},
}};

constexpr Slot kPlaces = {{
    {"at the market", "di pasar"}, {"near the river", "di dekat sungai"},
    {"in the village", "di desa"}, {"behind the mosque", "di belakang masjid"},
    {"at the train station", "di stasiun kereta"}, {"in the city centre", "di pusat kota"},
    {"beside the rice field", "di samping sawah"}, {"at the harbour", "di pelabuhan"},
    {"in the old house", "di rumah tua"}, {"near the bridge", "di dekat jembatan"},
    {"at the post office", "di kantor pos"}, {"in the hospital", "di rumah sakit"},
    {"on the hill", "di atas bukit"}, {"at the bus terminal", "di terminal bus"},
    {"in the school yard", "di halaman sekolah"}, {"near the beach", "di dekat pantai"},
    {"at the night market", "di pasar malam"}, {"in the back garden", "di kebun belakang"},
    {"at the airport", "di bandara"}, {"inside the warehouse", "di dalam gudang"},
}};

constexpr std::array<std::pair<const char*, const char*>, 8> kAdverbs = {{
    {"", ""}, {" yesterday", " kemarin"}, {" this morning", " tadi pagi"},
    {" last week", " minggu lalu"}, {" today", " hari ini"}, {" last night", " tadi malam"},
    {" again", " lagi"}, {" in secret", " diam-diam"},
}};

constexpr std::array<std::pair<const char*, const char*>, 12> kMonths = {{
    {"January", "Januari"}, {"February", "Februari"}, {"March", "Maret"},
    {"April", "April"}, {"May", "Mei"}, {"June", "Juni"}, {"July", "Juli"},
    {"August", "Agustus"}, {"September", "September"}, {"October", "Oktober"},
    {"November", "November"}, {"December", "Desember"},
}};

constexpr std::uint64_t kTemplateSpace = 20ull * 20 * 20 * 20 * 8;
constexpr std::uint64_t kTemplateStride = 7919;  // coprime to kTemplateSpace

std::pair<std::string, std::string> number_clause(std::mt19937_64& rng) {
  char en[64];
  char id[64];
  switch (uniform_below(rng, 4)) {
    case 0: {
      const auto day = 1 + uniform_below(rng, 28);
      const auto& month = kMonths[uniform_below(rng, kMonths.size())];
      const auto year = 1990 + uniform_below(rng, 35);
      std::snprintf(en, sizeof(en), " on %llu %s %llu", static_cast<unsigned long long>(day),
                    month.first, static_cast<unsigned long long>(year));
      std::snprintf(id, sizeof(id), " pada tanggal %llu %s %llu",
                    static_cast<unsigned long long>(day), month.second,
                    static_cast<unsigned long long>(year));
      break;
    }
    case 1: {
      const auto price = 5 + uniform_below(rng, 991);
      std::snprintf(en, sizeof(en), " for %llu thousand rupiah",
                    static_cast<unsigned long long>(price));
      std::snprintf(id, sizeof(id), " seharga %llu ribu rupiah",
                    static_cast<unsigned long long>(price));
      break;
    }
    case 2: {
      const auto hour = 1 + uniform_below(rng, 23);
      const auto minute = uniform_below(rng, 60);
      std::snprintf(en, sizeof(en), " at %llu:%02llu", static_cast<unsigned long long>(hour),
                    static_cast<unsigned long long>(minute));
      std::snprintf(id, sizeof(id), " pada pukul %llu:%02llu",
                    static_cast<unsigned long long>(hour),
                    static_cast<unsigned long long>(minute));
      break;
    }
    default: {
      const auto people = 2 + uniform_below(rng, 39);
      std::snprintf(en, sizeof(en), " with %llu other people",
                    static_cast<unsigned long long>(people));
      std::snprintf(id, sizeof(id), " bersama %llu orang lainnya",
                    static_cast<unsigned long long>(people));
      break;
    }
  }
  return {en, id};
}

}  // namespace

std::vector<BitextRecord> make_template_corpus(std::size_t n, std::uint64_t seed,
                                               const std::string& dataset_id) {
  if (n > kTemplateSpace) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "template corpus holds at most " + std::to_string(kTemplateSpace) +
                          " distinct pairs");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t offset = uniform_below(rng, kTemplateSpace);
  std::vector<BitextRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t k = (kTemplateStride * i + offset) % kTemplateSpace;
    const auto& subj = kSubjects[k % 20];
    k /= 20;
    const auto& verb = kVerbs[k % 20];
    k /= 20;
    const auto& obj = kObjects[k % 20];
    k /= 20;
    const auto& place = kPlaces[k % 20];
    k /= 20;
    const auto& adv = kAdverbs[k];

    BitextRecord r;
    r.dataset_id = dataset_id;
    r.line_no = i + 1;
    r.src_lang = LanguageCode("en");
    r.tgt_lang = LanguageCode("id");
    r.src_text = std::string(subj.first) + " " + verb.first + " " + obj.first + " " +
                 place.first + adv.first;
    r.tgt_text = std::string(subj.second) + " " + verb.second + " " + obj.second + " " +
                 place.second + adv.second;
    if (uniform_below(rng, 2) == 1) {
      auto [en, id] = number_clause(rng);
      r.src_text += en;
      r.tgt_text += id;
    }
    r.src_text += '.';
    r.tgt_text += '.';
    out.push_back(std::move(r));
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace bitext

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

// Labeled synthetic noise over clean bitext, and precision/recall scoring of
// filter verdicts against the labels.
//
// Every corruption is built so that its target filter must catch it: number
// perturbations always change the digit multiset, glued keywords always
// follow a lowercase letter or digit, injected duplicates always copy a pair
// that stays clean and appears earlier, and so on. When a `stateless_check`
// is supplied, candidates are also run through the per-record chain and
// skipped unless the chain attributes them to the intended reason (or, for
// the dedup classes, keeps them for dedup to judge).

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/content.hpp"
#include "bitext/dedup.hpp"
#include "bitext/pipeline.hpp"
#include "bitext/types.hpp"

namespace bitext {

enum class CorruptionClass : std::uint8_t {
  kMisalign,       // tgt taken from the next line
  kDupInject,      // copy of an earlier clean pair
  kCopySrc,        // tgt := src
  kPartialEmbed,   // tgt := tgt + " " + src
  kKeywordGlue,    // keyword glued to the end of tgt
  kNumberPerturb,  // one digit of one tgt digit run changed
  kForeignSwap,    // tgt replaced by a foreign-language line
  kOverlength,     // tgt repeated past max_chars
};

inline constexpr std::array<CorruptionClass, 8> kAllCorruptions = {
    CorruptionClass::kMisalign,     CorruptionClass::kDupInject,
    CorruptionClass::kCopySrc,      CorruptionClass::kPartialEmbed,
    CorruptionClass::kKeywordGlue,  CorruptionClass::kNumberPerturb,
    CorruptionClass::kForeignSwap,  CorruptionClass::kOverlength,
};

std::string_view to_string(CorruptionClass c);
std::optional<CorruptionClass> parse_corruption(std::string_view name);

// The reason code the matching filter emits for this class.
ReasonCode target_reason(CorruptionClass c);
FilterKind target_filter(CorruptionClass c);

struct CorruptionSpec {
  std::uint64_t seed = 0;
  std::map<CorruptionClass, double> rates;
};

void validate(const CorruptionSpec& spec);

// nullopt means CLEAN.
using Label = std::optional<CorruptionClass>;

std::string label_name(const Label& label);
std::optional<Label> parse_label(std::string_view name);

struct LabeledCorpus {
  std::vector<BitextRecord> records;  // line_no = index + 1
  std::vector<Label> labels;          // parallel to records

  friend bool operator==(const LabeledCorpus&, const LabeledCorpus&) = default;
};

struct GeneratorOptions {
  ContentConfig content;
  DedupConfig dedup;
  std::function<Verdict(const BitextRecord&)> stateless_check;
};

// Throws kInsufficientCleanRecords when a class cannot be filled with
// eligible records, kMissingForeignCorpus when FOREIGN_SWAP is requested
// without foreign lines.
LabeledCorpus generate(std::span<const BitextRecord> clean, const CorruptionSpec& spec,
                       std::span<const std::string> foreign,
                       const GeneratorOptions& options = {});

struct ClassMetrics {
  Label label;
  std::uint64_t labeled = 0;
  std::uint64_t removed = 0;            // by any filter
  std::uint64_t removed_by_target = 0;  // with target_reason(class)

  double recall() const;         // removed / labeled
  double target_recall() const;  // removed_by_target / labeled
};

struct ReasonMetrics {
  ReasonCode reason = ReasonCode::kNone;
  std::uint64_t removed = 0;
  std::uint64_t matched = 0;  // removed records whose class targets this reason

  double precision() const;
};

struct EvalReport {
  std::vector<ClassMetrics> classes;  // CLEAN first, then kAllCorruptions order
  std::vector<ReasonMetrics> reasons;  // every reason except NONE
  // (label name, reason) -> count, kept records under NONE.
  std::map<std::pair<std::string, ReasonCode>, std::uint64_t> confusion;

  const ClassMetrics& for_label(const Label& label) const;
  const ReasonMetrics& for_reason(ReasonCode reason) const;
  double clean_false_removal_rate() const;
};

EvalReport evaluate(const LabeledCorpus& corpus, std::span<const Verdict> verdicts);

void write_labels(const LabeledCorpus& corpus, const std::filesystem::path& path);
// line_no -> label; every line_no from 1..n must be present.
std::vector<Label> read_labels(const std::filesystem::path& path);

void write_metrics(std::ostream& out, const EvalReport& report);
void write_metrics(const EvalReport& report, const std::filesystem::path& path);

// Deterministic, template-built English-Indonesian corpus with unique sides
// and no duplicate pairs. Roughly half the pairs carry dates, prices or
// times that agree on both sides.
std::vector<BitextRecord> make_template_corpus(std::size_t n, std::uint64_t seed,
                                               const std::string& dataset_id = "synthetic.en-id");

// Uniform integer in [0, bound) from raw 64-bit draws, so results do not
// depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace bitext

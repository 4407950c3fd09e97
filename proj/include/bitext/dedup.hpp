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

// Exact-string duplicate heuristics: identical source/target, one side
// embedded in the other, repeated pairs and repeated single sides.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bitext/types.hpp"

namespace bitext {

inline constexpr std::string_view kDedupFilterName = "dedup";

struct DedupConfig {
  bool enable_one_side = true;
  bool enable_partial = true;
  bool enable_identical = true;
  bool enable_exact_pair = true;
  std::size_t partial_min_chars = 10;  // >= 1
};

void validate(const DedupConfig& cfg);

bool is_identical_pair(const BitextRecord& record);

// The shorter normalized side is a proper substring of the longer one and
// has at least cfg.partial_min_chars characters. Checked in both directions.
bool is_partial_duplicate(const BitextRecord& record, const DedupConfig& cfg);

// Variants on already-normalized text.
bool is_identical_normalized(std::string_view src, std::string_view tgt);
bool is_partial_normalized(std::string_view src, std::string_view tgt,
                           std::size_t min_chars);

// Single-pass keep-first deduplicator over one dataset. Records must be fed
// in line order. Only records that clear the identical/partial checks enter
// the seen-indexes.
class Deduplicator {
 public:
  explicit Deduplicator(DedupConfig cfg);

  Verdict check(const BitextRecord& record);
  Verdict check_normalized(std::string norm_src, std::string norm_tgt);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::string, std::string>& p) const;
  };

  DedupConfig cfg_;
  std::unordered_set<std::string> seen_src_;
  std::unordered_set<std::string> seen_tgt_;
  std::unordered_set<std::pair<std::string, std::string>, PairHash> seen_pairs_;
};

// One verdict per record, in input order. Priority: identical, partial,
// repeated pair, repeated side.
std::vector<Verdict> dedup_pass(std::span<const BitextRecord> records,
                                const DedupConfig& cfg);

}  // namespace bitext

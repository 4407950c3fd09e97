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

#include "bitext/dedup.hpp"

#include <functional>

#include "bitext/text.hpp"

namespace bitext {

void validate(const DedupConfig& cfg) {
  if (cfg.partial_min_chars < 1) {
    throw BitextError(ErrorCode::kInvalidArgument,
                      "partial_min_chars must be >= 1");
  }
}

bool is_identical_normalized(std::string_view src, std::string_view tgt) {
  return !src.empty() && src == tgt;
}

bool is_partial_normalized(std::string_view src, std::string_view tgt,
                           std::size_t min_chars) {
  if (src.size() == tgt.size()) return false;  // proper substring only
  const std::string_view shorter = src.size() < tgt.size() ? src : tgt;
  const std::string_view longer = src.size() < tgt.size() ? tgt : src;
  if (char_count(shorter) < min_chars) return false;
  return longer.find(shorter) != std::string_view::npos;
}

bool is_identical_pair(const BitextRecord& record) {
  return is_identical_normalized(normalize_text(record.src_text),
                                 normalize_text(record.tgt_text));
}

bool is_partial_duplicate(const BitextRecord& record, const DedupConfig& cfg) {
  const std::string src = normalize_text(record.src_text);
  const std::string tgt = normalize_text(record.tgt_text);
  return !is_identical_normalized(src, tgt) &&
         is_partial_normalized(src, tgt, cfg.partial_min_chars);
}

std::size_t Deduplicator::PairHash::operator()(
    const std::pair<std::string, std::string>& p) const {
  const std::size_t h1 = std::hash<std::string>{}(p.first);
  const std::size_t h2 = std::hash<std::string>{}(p.second);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Deduplicator::Deduplicator(DedupConfig cfg) : cfg_(cfg) { validate(cfg_); }

Verdict Deduplicator::check(const BitextRecord& record) {
  return check_normalized(normalize_text(record.src_text),
                          normalize_text(record.tgt_text));
}

Verdict Deduplicator::check_normalized(std::string norm_src,
                                       std::string norm_tgt) {
  if (cfg_.enable_identical && is_identical_normalized(norm_src, norm_tgt)) {
    return Verdict::remove(ReasonCode::kDupIdentical, kDedupFilterName);
  }
  if (cfg_.enable_partial && norm_src != norm_tgt &&
      is_partial_normalized(norm_src, norm_tgt, cfg_.partial_min_chars)) {
    return Verdict::remove(ReasonCode::kDupPartial, kDedupFilterName);
  }

  const bool src_seen = seen_src_.contains(norm_src);
  const bool tgt_seen = seen_tgt_.contains(norm_tgt);
  bool pair_seen = false;
  if (src_seen && tgt_seen) {
    pair_seen = seen_pairs_.contains({norm_src, norm_tgt});
  }
  if (!pair_seen) {
    // A pair can only be new if one of its sides is new, or both sides were
    // seen apart.
    seen_pairs_.emplace(norm_src, norm_tgt);
  }
  if (!src_seen) seen_src_.insert(std::move(norm_src));
  if (!tgt_seen) seen_tgt_.insert(std::move(norm_tgt));

  if (cfg_.enable_exact_pair && pair_seen) {
    return Verdict::remove(ReasonCode::kDupPair, kDedupFilterName);
  }
  if (cfg_.enable_one_side && (src_seen || tgt_seen) && !pair_seen) {
    return Verdict::remove(ReasonCode::kDupSide, kDedupFilterName);
  }
  return Verdict::keep();
}

std::vector<Verdict> dedup_pass(std::span<const BitextRecord> records,
                                const DedupConfig& cfg) {
  Deduplicator dedup(cfg);
  std::vector<Verdict> verdicts;
  verdicts.reserve(records.size());
  for (const BitextRecord& r : records) verdicts.push_back(dedup.check(r));
  return verdicts;
}

}  // namespace bitext

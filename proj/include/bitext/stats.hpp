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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "bitext/types.hpp"

namespace bitext {

// Per-dataset line counts. `before == after + total_removed()` always holds
// for stats produced by the pipeline.
struct FilterStats {
  std::string dataset_id;
  std::string lang_pair;  // "en-id"; "ALL" for merged totals
  std::uint64_t before = 0;
  std::uint64_t after = 0;
  std::array<std::uint64_t, kReasonCount> removed_by_reason{};

  std::uint64_t& removed(ReasonCode r) {
    return removed_by_reason[static_cast<std::size_t>(r)];
  }
  std::uint64_t removed(ReasonCode r) const {
    return removed_by_reason[static_cast<std::size_t>(r)];
  }
  std::uint64_t total_removed() const;
  bool conserved() const { return before == after + total_removed(); }

  friend bool operator==(const FilterStats&, const FilterStats&) = default;
};

// Component-wise sum; dataset_id "TOTAL", lang_pair "ALL".
FilterStats merge_stats(std::span<const FilterStats> stats);

// (before - after) / before * 100, rounded half-up to two decimals using
// integer arithmetic. "0.00" when before is zero.
std::string format_reduction_pct(std::uint64_t before, std::uint64_t after);

// Throws std::logic_error when the counts do not balance.
void check_conservation(const FilterStats& stats);

}  // namespace bitext

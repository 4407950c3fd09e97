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

#include "bitext/stats.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace bitext {

std::uint64_t FilterStats::total_removed() const {
  return std::accumulate(removed_by_reason.begin(), removed_by_reason.end(),
                         std::uint64_t{0});
}

FilterStats merge_stats(std::span<const FilterStats> stats) {
  FilterStats total;
  total.dataset_id = "TOTAL";
  total.lang_pair = "ALL";
  for (const FilterStats& s : stats) {
    total.before += s.before;
    total.after += s.after;
    for (std::size_t i = 0; i < kReasonCount; ++i) {
      total.removed_by_reason[i] += s.removed_by_reason[i];
    }
  }
  return total;
}

std::string format_reduction_pct(std::uint64_t before, std::uint64_t after) {
  if (before == 0 || after >= before) return "0.00";
  // Basis points, rounded half-up. unsigned __int128 keeps this exact for
  // any 64-bit count.
  const unsigned __int128 removed = before - after;
  const auto bp = static_cast<std::uint64_t>(
      (removed * 20000 + before) / (static_cast<unsigned __int128>(before) * 2));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%llu.%02llu",
                static_cast<unsigned long long>(bp / 100),
                static_cast<unsigned long long>(bp % 100));
  return buf;
}

void check_conservation(const FilterStats& stats) {
  if (!stats.conserved()) {
    throw std::logic_error("conservation violated for dataset '" +
                           stats.dataset_id + "': before=" +
                           std::to_string(stats.before) + " after=" +
                           std::to_string(stats.after) + " removed=" +
                           std::to_string(stats.total_removed()));
  }
}

}  // namespace bitext

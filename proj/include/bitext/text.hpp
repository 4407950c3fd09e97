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

// UTF-8 helpers and the comparison-key normalization used by the filters.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

// NFC, trimmed, with every internal run of Unicode whitespace collapsed to a
// single U+0020. Case is preserved. Input must be valid UTF-8.
std::string normalize_text(std::string_view text);

bool is_valid_utf8(std::string_view text) noexcept;

// Number of Unicode scalar values.
std::size_t char_count(std::string_view text) noexcept;

// Full Unicode lowercase mapping (root locale).
std::string to_lower(std::string_view text);

// Decodes valid UTF-8 into code points.
std::vector<char32_t> decode_utf8(std::string_view text);
void append_utf8(std::string& out, char32_t cp);

}  // namespace bitext

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

// Direction tags for multilingual training data: "[en] [tl] Today is a sunny
// day." Only the source side is tagged; targets pass through untouched.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/types.hpp"

namespace bitext {

struct DirectedExample {
  std::string tagged_src;
  std::string tgt;
  LanguageCode src_lang{"en"};
  LanguageCode tgt_lang{"id"};
};

struct TaggedText {
  LanguageCode src_lang{"en"};
  LanguageCode tgt_lang{"id"};
  std::string text;

  friend bool operator==(const TaggedText&, const TaggedText&) = default;
};

// "[src] [tgt] " + text. Throws kSameLanguage when the codes match.
std::string tag_source(std::string_view text, LanguageCode src_lang, LanguageCode tgt_lang);

// Inverse of tag_source. Throws kMalformedTag.
TaggedText strip_tags(std::string_view tagged);

// Forward example per record; with `bidirectional`, the reverse example
// follows it immediately.
std::vector<DirectedExample> emit_directions(std::span<const BitextRecord> records,
                                             bool bidirectional);

// "[xx]" for each language, sorted.
std::vector<std::string> special_tokens(const LanguageSet& langs);

void write_special_tokens(const std::filesystem::path& path, const LanguageSet& langs);

// Appends examples to an open pair of streams, one line each.
void write_examples(std::ostream& src_out, std::ostream& tgt_out,
                    std::span<const DirectedExample> examples);

}  // namespace bitext

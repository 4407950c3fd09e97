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

#include "bitext/preformat.hpp"

#include <fstream>
#include <ostream>

namespace bitext {
namespace {

constexpr std::size_t kTagPrefixLength = 10;  // "[xx] [yy] "

std::optional<LanguageCode> bracketed_code(std::string_view s) {
  if (s.size() != 4 || s[0] != '[' || s[3] != ']') return std::nullopt;
  return LanguageCode::parse(s.substr(1, 2));
}

}  // namespace

std::string tag_source(std::string_view text, LanguageCode src_lang, LanguageCode tgt_lang) {
  if (src_lang == tgt_lang) {
    throw BitextError(ErrorCode::kSameLanguage,
                      "source and target language are both '" + src_lang.str() + "'");
  }
  std::string out;
  out.reserve(kTagPrefixLength + text.size());
  out += '[';
  out += src_lang.view();
  out += "] [";
  out += tgt_lang.view();
  out += "] ";
  out += text;
  return out;
}

TaggedText strip_tags(std::string_view tagged) {
  auto malformed = [&] {
    return BitextError(ErrorCode::kMalformedTag,
                       "expected \"[xx] [yy] \" prefix in '" +
                           std::string(tagged.substr(0, 32)) + "'");
  };
  if (tagged.size() < kTagPrefixLength || tagged[4] != ' ' || tagged[9] != ' ') {
    throw malformed();
  }
  auto src = bracketed_code(tagged.substr(0, 4));
  auto tgt = bracketed_code(tagged.substr(5, 4));
  if (!src || !tgt || *src == *tgt) throw malformed();
  return {*src, *tgt, std::string(tagged.substr(kTagPrefixLength))};
}

std::vector<DirectedExample> emit_directions(std::span<const BitextRecord> records,
                                             bool bidirectional) {
  std::vector<DirectedExample> out;
  out.reserve(records.size() * (bidirectional ? 2 : 1));
  for (const BitextRecord& r : records) {
    out.push_back({tag_source(r.src_text, r.src_lang, r.tgt_lang), r.tgt_text, r.src_lang,
                   r.tgt_lang});
    if (bidirectional) {
      out.push_back({tag_source(r.tgt_text, r.tgt_lang, r.src_lang), r.src_text, r.tgt_lang,
                     r.src_lang});
    }
  }
  return out;
}

std::vector<std::string> special_tokens(const LanguageSet& langs) {
  std::vector<std::string> out;
  for (const LanguageCode& lang : langs) out.push_back("[" + lang.str() + "]");
  return out;
}

void write_special_tokens(const std::filesystem::path& path, const LanguageSet& langs) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const std::string& token : special_tokens(langs)) out << token << '\n';
  out.flush();
  if (!out) throw BitextError(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

void write_examples(std::ostream& src_out, std::ostream& tgt_out,
                    std::span<const DirectedExample> examples) {
  for (const DirectedExample& e : examples) {
    src_out << e.tagged_src << '\n';
    tgt_out << e.tgt << '\n';
  }
}

}  // namespace bitext

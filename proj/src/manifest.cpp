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

#include "bitext/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bitext {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& message) {
  throw BitextError(ErrorCode::kInvalidManifest, (ptr.empty() ? "/" : ptr) + ": " + message);
}

std::string child(const std::string& ptr, std::string_view key) {
  return ptr + "/" + std::string(key);
}

std::string child(const std::string& ptr, std::size_t index) {
  return ptr + "/" + std::to_string(index);
}

void expect_object(const json& j, const std::string& ptr,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(ptr, "must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(child(ptr, key), "unknown field");
    }
  }
}

const json* find(const json& obj, std::string_view key) {
  auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

std::string get_string(const json& obj, std::string_view key, const std::string& ptr) {
  const json* v = find(obj, key);
  if (v == nullptr) fail(child(ptr, key), "required field missing");
  if (!v->is_string()) fail(child(ptr, key), "must be a string");
  return v->get<std::string>();
}

bool get_bool(const json& obj, std::string_view key, const std::string& ptr, bool fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_boolean()) fail(child(ptr, key), "must be a boolean");
  return v->get<bool>();
}

std::size_t get_count(const json& obj, std::string_view key, const std::string& ptr,
                      std::size_t fallback, std::size_t min) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer()) fail(child(ptr, key), "must be an integer");
  const auto n = v->get<long long>();
  if (n < static_cast<long long>(min)) {
    fail(child(ptr, key), "must be >= " + std::to_string(min));
  }
  return static_cast<std::size_t>(n);
}

double get_fraction(const json& obj, std::string_view key, const std::string& ptr,
                    double fallback, bool allow_zero) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) fail(child(ptr, key), "must be a number");
  const double d = v->get<double>();
  if (!(d <= 1.0 && (allow_zero ? d >= 0.0 : d > 0.0))) {
    fail(child(ptr, key), allow_zero ? "must be in [0, 1]" : "must be in (0, 1]");
  }
  return d;
}

std::vector<std::string> get_string_list(const json& obj, std::string_view key,
                                         const std::string& ptr) {
  const json* v = find(obj, key);
  std::vector<std::string> out;
  if (v == nullptr) return out;
  if (!v->is_array()) fail(child(ptr, key), "must be an array of strings");
  for (std::size_t i = 0; i < v->size(); ++i) {
    if (!(*v)[i].is_string()) fail(child(child(ptr, key), i), "must be a string");
    out.push_back((*v)[i].get<std::string>());
  }
  return out;
}

LanguageCode get_lang(const json& obj, std::string_view key, const std::string& ptr) {
  const std::string s = get_string(obj, key, ptr);
  auto lang = LanguageCode::parse(s);
  if (!lang) fail(child(ptr, key), "invalid language code '" + s + "'");
  return *lang;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

fs::path get_file(const json& obj, std::string_view key, const std::string& ptr,
                  const ManifestOptions& opts) {
  fs::path path = resolve(opts.base_dir, get_string(obj, key, ptr));
  if (opts.check_files && !fs::is_regular_file(path)) {
    fail(child(ptr, key), "file not found: " + path.string());
  }
  return path;
}

DedupConfig parse_dedup(const json& j, const std::string& ptr) {
  expect_object(j, ptr,
                {"enable_one_side", "enable_partial", "enable_identical", "enable_exact_pair",
                 "partial_min_chars"});
  DedupConfig cfg;
  cfg.enable_one_side = get_bool(j, "enable_one_side", ptr, cfg.enable_one_side);
  cfg.enable_partial = get_bool(j, "enable_partial", ptr, cfg.enable_partial);
  cfg.enable_identical = get_bool(j, "enable_identical", ptr, cfg.enable_identical);
  cfg.enable_exact_pair = get_bool(j, "enable_exact_pair", ptr, cfg.enable_exact_pair);
  cfg.partial_min_chars = get_count(j, "partial_min_chars", ptr, cfg.partial_min_chars, 1);
  return cfg;
}

LangScriptConfig parse_langscript(const json& j, const std::string& ptr) {
  expect_object(j, ptr,
                {"allowed_langs", "confidence_threshold", "min_chars_for_langid",
                 "fast_path_ratio", "expected_scripts"});
  LangScriptConfig cfg;
  if (find(j, "allowed_langs") != nullptr) {
    const auto codes = get_string_list(j, "allowed_langs", ptr);
    if (codes.empty()) fail(child(ptr, "allowed_langs"), "must not be empty");
    cfg.allowed_langs.clear();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      auto lang = LanguageCode::parse(codes[i]);
      if (!lang) {
        fail(child(child(ptr, "allowed_langs"), i), "invalid language code '" + codes[i] + "'");
      }
      cfg.allowed_langs.insert(*lang);
    }
  }
  cfg.confidence_threshold =
      get_fraction(j, "confidence_threshold", ptr, cfg.confidence_threshold, true);
  cfg.min_chars_for_langid =
      get_count(j, "min_chars_for_langid", ptr, cfg.min_chars_for_langid, 0);
  cfg.fast_path_ratio = get_fraction(j, "fast_path_ratio", ptr, cfg.fast_path_ratio, false);
  if (const json* scripts = find(j, "expected_scripts")) {
    const std::string sptr = child(ptr, "expected_scripts");
    if (!scripts->is_object()) fail(sptr, "must be an object");
    for (const auto& [code, list] : scripts->items()) {
      auto lang = LanguageCode::parse(code);
      if (!lang) fail(child(sptr, code), "invalid language code");
      ScriptSet set;
      for (const std::string& name : get_string_list(*scripts, code, sptr)) set.insert(name);
      cfg.expected_scripts[*lang] = std::move(set);
    }
  }
  try {
    validate(cfg);
  } catch (const BitextError& e) {
    fail(ptr, e.what());
  }
  return cfg;
}

ContentConfig parse_content(const json& j, const std::string& ptr, const ManifestOptions& opts) {
  expect_object(j, ptr,
                {"keywords", "keywords_file", "keyword_match", "symbols", "symbols_file",
                 "drop_bracketed_lines", "check_numbers", "strip_leading_zeros", "max_chars"});
  ContentConfig cfg;
  if (find(j, "keywords") != nullptr) cfg.keywords = get_string_list(j, "keywords", ptr);
  if (find(j, "keywords_file") != nullptr) {
    const fs::path file = get_file(j, "keywords_file", ptr, opts);
    if (opts.check_files) cfg.keywords = load_list_file(file);
  }
  if (find(j, "keyword_match") != nullptr) {
    const std::string mode = get_string(j, "keyword_match", ptr);
    if (mode == "glued") {
      cfg.keyword_match = KeywordMatch::kGlued;
    } else if (mode == "glued_any_case") {
      cfg.keyword_match = KeywordMatch::kGluedAnyCase;
    } else {
      fail(child(ptr, "keyword_match"), "must be \"glued\" or \"glued_any_case\"");
    }
  }
  if (find(j, "symbols") != nullptr) cfg.symbols = get_string_list(j, "symbols", ptr);
  if (find(j, "symbols_file") != nullptr) {
    const fs::path file = get_file(j, "symbols_file", ptr, opts);
    if (opts.check_files) cfg.symbols = load_list_file(file);
  }
  cfg.drop_bracketed_lines = get_bool(j, "drop_bracketed_lines", ptr, cfg.drop_bracketed_lines);
  cfg.check_numbers = get_bool(j, "check_numbers", ptr, cfg.check_numbers);
  cfg.strip_leading_zeros = get_bool(j, "strip_leading_zeros", ptr, cfg.strip_leading_zeros);
  cfg.max_chars = get_count(j, "max_chars", ptr, cfg.max_chars, 1);
  try {
    validate(cfg);
  } catch (const BitextError& e) {
    fail(ptr, e.what());
  }
  return cfg;
}

DatasetEntry parse_dataset(const json& j, const std::string& ptr, const ManifestOptions& opts) {
  expect_object(j, ptr,
                {"id", "src", "tgt", "src_lang", "tgt_lang", "filters", "dedup", "langscript",
                 "content"});
  DatasetEntry entry;
  entry.source.dataset_id = get_string(j, "id", ptr);
  if (entry.source.dataset_id.empty() ||
      entry.source.dataset_id.find_first_of("/\\\t\n") != std::string::npos ||
      entry.source.dataset_id.front() == '.') {
    fail(child(ptr, "id"), "must be a nonempty file-name-safe identifier");
  }
  entry.source.src_path = get_file(j, "src", ptr, opts);
  entry.source.tgt_path = get_file(j, "tgt", ptr, opts);
  entry.source.src_lang = get_lang(j, "src_lang", ptr);
  entry.source.tgt_lang = get_lang(j, "tgt_lang", ptr);
  if (entry.source.src_lang == entry.source.tgt_lang) {
    fail(child(ptr, "tgt_lang"), "must differ from src_lang");
  }

  DatasetConfig& cfg = entry.config;
  if (find(j, "filters") != nullptr) {
    cfg.enabled = FilterSet();
    const auto names = get_string_list(j, "filters", ptr);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto kind = parse_filter_kind(names[i]);
      if (!kind) fail(child(child(ptr, "filters"), i), "unknown filter '" + names[i] + "'");
      if (!seen.insert(names[i]).second) {
        fail(child(child(ptr, "filters"), i), "duplicate filter '" + names[i] + "'");
      }
      cfg.enabled.insert(*kind);
    }
  }
  if (const json* d = find(j, "dedup")) cfg.dedup = parse_dedup(*d, child(ptr, "dedup"));
  if (const json* l = find(j, "langscript")) {
    cfg.langscript = parse_langscript(*l, child(ptr, "langscript"));
  }
  if (const json* c = find(j, "content")) {
    cfg.content = parse_content(*c, child(ptr, "content"), opts);
  }
  if (cfg.enabled.contains(FilterKind::kScript)) {
    for (LanguageCode lang : {entry.source.src_lang, entry.source.tgt_lang}) {
      if (!cfg.langscript.expected_scripts.contains(lang)) {
        fail(child(child(ptr, "langscript"), "expected_scripts"),
             "no expected scripts for '" + lang.str() + "' (required by the script filter)");
      }
    }
  }
  return entry;
}

}  // namespace

DatasetManifest parse_manifest(std::string_view json_text, const ManifestOptions& opts) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail("", std::string("not valid JSON: ") + e.what());
  }
  expect_object(root, "", {"description", "output_dir", "profiles_dir", "datasets"});
  if (find(root, "description") != nullptr) get_string(root, "description", "");
  DatasetManifest manifest;
  manifest.output_dir = resolve(opts.base_dir, get_string(root, "output_dir", ""));
  if (find(root, "profiles_dir") != nullptr) {
    manifest.profiles_dir = resolve(opts.base_dir, get_string(root, "profiles_dir", ""));
  }
  const json* datasets = find(root, "datasets");
  if (datasets == nullptr) fail("/datasets", "required field missing");
  if (!datasets->is_array()) fail("/datasets", "must be an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < datasets->size(); ++i) {
    const std::string ptr = child("/datasets", i);
    DatasetEntry entry = parse_dataset((*datasets)[i], ptr, opts);
    if (!ids.insert(entry.source.dataset_id).second) {
      fail(child(ptr, "id"), "duplicate dataset id '" + entry.source.dataset_id + "'");
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

DatasetManifest load_manifest(const fs::path& path, bool check_files) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw BitextError(ErrorCode::kInvalidManifest, "cannot read manifest '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), {path.parent_path(), check_files});
}

}  // namespace bitext

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

// bitext-filter: command-line front end.
//
// Exit codes: 0 success, 1 usage or validation error, 2 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bitext/io.hpp"
#include "bitext/langscript.hpp"
#include "bitext/manifest.hpp"
#include "bitext/pipeline.hpp"
#include "bitext/preformat.hpp"
#include "bitext/synthbench.hpp"

namespace fs = std::filesystem;
using namespace bitext;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

bool is_validation_error(ErrorCode code) {
  return code == ErrorCode::kInvalidManifest || code == ErrorCode::kInvalidArgument ||
         code == ErrorCode::kSameLanguage;
}

// Flag, then manifest, then BITEXT_PROFILES_DIR, then the bundled profiles.
fs::path resolve_profiles_dir(const std::string& flag, const fs::path& from_manifest) {
  if (!flag.empty()) return flag;
  if (!from_manifest.empty()) return from_manifest;
  if (const char* env = std::getenv("BITEXT_PROFILES_DIR"); env && *env) return env;
#ifdef BITEXT_DEFAULT_PROFILES_DIR
  return BITEXT_DEFAULT_PROFILES_DIR;
#else
  return {};
#endif
}

std::size_t resolve_workers(std::size_t flag) {
  if (flag > 0) return flag;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct FilterArgs {
  std::string manifest;
  std::string output_dir;
  std::string report;
  std::string audit;
  std::string profiles_dir;
  std::size_t workers = 0;
};

int run_filter(const FilterArgs& a) {
  DatasetManifest manifest = load_manifest(a.manifest);
  RunOptions opts;
  opts.pipeline.workers = resolve_workers(a.workers);
  opts.output_dir = a.output_dir;
  opts.report_path = a.report;
  opts.audit_path = a.audit;
  opts.profiles_dir = resolve_profiles_dir(a.profiles_dir, manifest.profiles_dir);

  PipelineResult result = run_pipeline(manifest, opts);
  const std::vector<FilterStats> rows = result.report_rows();
  print_report_table(std::cout, rows);
  std::cout << "report: " << result.report_path.string() << '\n'
            << "audit:  " << result.audit_path.string() << '\n';
  for (const DatasetFailure& f : result.failures) {
    std::cerr << "dataset " << f.dataset_id << " failed [" << to_string(f.code)
              << "]: " << f.message << '\n';
  }
  return result.ok() ? kExitOk : kExitRuntime;
}

struct PreformatArgs {
  std::string manifest;
  std::string output_dir;
  std::string src;
  std::string tgt;
  std::string src_lang;
  std::string tgt_lang;
  bool unidirectional = false;
};

int run_preformat(const PreformatArgs& a) {
  std::vector<FilePairSource> sources;
  fs::path out_dir = a.output_dir;
  if (!a.manifest.empty()) {
    // Tags the filtered outputs the manifest's filter run produced.
    DatasetManifest manifest = load_manifest(a.manifest, false);
    const fs::path filtered_dir = manifest.output_dir;
    if (out_dir.empty()) out_dir = filtered_dir / "preformat";
    for (const DatasetEntry& e : manifest.entries) {
      FilePairSource s = e.source;
      s.src_path = filtered_path(filtered_dir, s.dataset_id, s.src_lang);
      s.tgt_path = filtered_path(filtered_dir, s.dataset_id, s.tgt_lang);
      sources.push_back(std::move(s));
    }
  } else {
    if (a.src.empty() || a.tgt.empty() || a.src_lang.empty() || a.tgt_lang.empty() ||
        out_dir.empty()) {
      throw BitextError(ErrorCode::kInvalidArgument,
                        "preformat needs --manifest, or --src, --tgt, --src-lang, --tgt-lang "
                        "and --output-dir");
    }
    FilePairSource s;
    s.src_path = a.src;
    s.tgt_path = a.tgt;
    s.src_lang = LanguageCode(a.src_lang);
    s.tgt_lang = LanguageCode(a.tgt_lang);
    s.dataset_id = "input";
    if (s.src_lang == s.tgt_lang) {
      throw BitextError(ErrorCode::kSameLanguage, "--src-lang and --tgt-lang are equal");
    }
    sources.push_back(std::move(s));
  }

  fs::create_directories(out_dir);
  std::ofstream src_out(out_dir / "train.src", std::ios::binary | std::ios::trunc);
  std::ofstream tgt_out(out_dir / "train.tgt", std::ios::binary | std::ios::trunc);
  std::size_t examples = 0;
  LanguageSet langs = task_languages();
  for (const FilePairSource& s : sources) {
    langs.insert(s.src_lang);
    langs.insert(s.tgt_lang);
    BitextReader reader(s);
    std::vector<BitextRecord> batch;
    while (reader.next_batch(batch, 8192)) {
      const auto out = emit_directions(batch, !a.unidirectional);
      write_examples(src_out, tgt_out, out);
      examples += out.size();
    }
  }
  src_out.flush();
  tgt_out.flush();
  if (!src_out || !tgt_out) {
    throw BitextError(ErrorCode::kIo, "cannot write to '" + out_dir.string() + "'");
  }
  write_special_tokens(out_dir / "special_tokens.txt", langs);
  std::cout << examples << " examples written to " << out_dir.string() << '\n';
  return kExitOk;
}

struct SynthArgs {
  std::string output_dir;
  std::string src;
  std::string tgt;
  std::string src_lang = "en";
  std::string tgt_lang = "id";
  std::string foreign;
  std::string profiles_dir;
  std::string dataset_id = "synthetic";
  std::vector<std::string> rates;
  std::size_t records = 10000;
  std::uint64_t seed = 0;
  bool no_verify = false;
};

int run_synth(const SynthArgs& a) {
  CorruptionSpec spec;
  spec.seed = a.seed;
  for (const std::string& item : a.rates) {
    const auto eq = item.find('=');
    std::optional<CorruptionClass> c;
    double rate = -1.0;
    if (eq != std::string::npos) {
      c = parse_corruption(item.substr(0, eq));
      try {
        rate = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        c.reset();
      }
    }
    if (!c) {
      throw BitextError(ErrorCode::kInvalidArgument,
                        "--rate expects CLASS=FRACTION, got '" + item + "'");
    }
    spec.rates[*c] = rate;
  }
  validate(spec);

  std::vector<BitextRecord> clean;
  if (!a.src.empty() || !a.tgt.empty()) {
    FilePairSource s;
    s.src_path = a.src;
    s.tgt_path = a.tgt;
    s.src_lang = LanguageCode(a.src_lang);
    s.tgt_lang = LanguageCode(a.tgt_lang);
    s.dataset_id = a.dataset_id;
    clean = read_bitext(s);
  } else {
    clean = make_template_corpus(a.records, a.seed, a.dataset_id);
  }

  std::vector<std::string> foreign;
  if (!a.foreign.empty()) foreign = read_lines(a.foreign);

  DatasetConfig config;
  std::optional<LanguageDetector> detector;
  const fs::path profiles_dir = resolve_profiles_dir(a.profiles_dir, {});
  if (!profiles_dir.empty() && fs::is_directory(profiles_dir)) {
    detector.emplace(load_profiles_dir(profiles_dir),
                     DetectorOptions::from_config(config.langscript));
  } else {
    config.enabled.erase(FilterKind::kLanguage);
  }

  if (!a.no_verify) {
    // Only pairs that survive every filter count as clean.
    const std::vector<Verdict> verdicts =
        filter_records(clean, config, detector ? &*detector : nullptr);
    std::vector<BitextRecord> kept;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      if (verdicts[i].kept()) kept.push_back(std::move(clean[i]));
    }
    if (kept.size() != clean.size()) {
      std::cerr << (clean.size() - kept.size()) << " of " << clean.size()
                << " input pairs failed the filters and were dropped before corruption\n";
    }
    clean = std::move(kept);
  }

  GeneratorOptions gen;
  gen.content = config.content;
  gen.dedup = config.dedup;
  RecordFilter chain(config, detector ? &*detector : nullptr);
  gen.stateless_check = [&chain](const BitextRecord& r) { return chain(r); };
  const LabeledCorpus corpus = generate(clean, spec, foreign, gen);

  const fs::path out_dir = a.output_dir;
  const LanguageCode src_lang(a.src_lang);
  const LanguageCode tgt_lang(a.tgt_lang);
  write_bitext(corpus.records, filtered_path(out_dir, a.dataset_id, src_lang),
               filtered_path(out_dir, a.dataset_id, tgt_lang));
  write_labels(corpus, out_dir / "labels.tsv");
  std::cout << corpus.records.size() << " pairs written to " << out_dir.string() << '\n';
  return kExitOk;
}

struct EvaluateArgs {
  std::string labels;
  std::string audit;
  std::string dataset_id;
  std::string output;
};

int run_evaluate(const EvaluateArgs& a) {
  const std::vector<Label> labels = read_labels(a.labels);
  std::vector<Verdict> verdicts(labels.size(), Verdict::keep());
  for (const AuditEntry& e : read_audit(a.audit)) {
    if (!a.dataset_id.empty() && e.dataset_id != a.dataset_id) continue;
    if (e.line_no == 0 || e.line_no > labels.size()) {
      throw BitextError(ErrorCode::kInvalidArgument,
                        "audit line " + std::to_string(e.line_no) + " of dataset '" +
                            e.dataset_id + "' has no label");
    }
    verdicts[e.line_no - 1] = Verdict::remove(e.reason, e.filter_name);
  }
  LabeledCorpus corpus;
  corpus.labels = labels;
  corpus.records.resize(labels.size());
  const EvalReport report = evaluate(corpus, verdicts);
  if (a.output.empty()) {
    write_metrics(std::cout, report);
  } else {
    write_metrics(report, a.output);
  }
  return kExitOk;
}

struct BuildProfileArgs {
  std::string lang;
  std::string input;
  std::string output;
};

int run_build_profile(const BuildProfileArgs& a) {
  const LanguageCode lang(a.lang);
  const LangProfile profile = build_profile(read_lines(a.input), lang);
  const fs::path out = a.output.empty() ? fs::path(a.lang + ".profile") : fs::path(a.output);
  save_profile(profile, out);
  std::cout << profile.total_trigrams << " trigrams, " << profile.counts.size()
            << " distinct, written to " << out.string() << '\n';
  return kExitOk;
}

int run_validate(const std::string& path) {
  const DatasetManifest manifest = load_manifest(path);
  std::cout << path << ": ok, " << manifest.entries.size() << " dataset(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filter, tag and benchmark parallel corpora."};
  app.require_subcommand(1);

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Run the filter pipeline over a manifest");
  filter->add_option("--manifest", fa.manifest, "Manifest JSON")->required();
  filter->add_option("--output-dir", fa.output_dir, "Override the manifest output_dir");
  filter->add_option("--report", fa.report, "Report TSV path");
  filter->add_option("--audit", fa.audit, "Audit TSV path");
  filter->add_option("--workers", fa.workers, "Worker threads (0 = all cores)");
  filter->add_option("--profiles-dir", fa.profiles_dir, "Language profile directory");

  PreformatArgs pa;
  auto* preformat = app.add_subcommand("preformat", "Write direction-tagged training files");
  preformat->add_option("--manifest", pa.manifest, "Tag the filtered outputs of a manifest");
  preformat->add_option("--output-dir", pa.output_dir, "Directory for train.src/train.tgt");
  preformat->add_option("--src", pa.src, "Source file (without --manifest)");
  preformat->add_option("--tgt", pa.tgt, "Target file (without --manifest)");
  preformat->add_option("--src-lang", pa.src_lang, "Source language code");
  preformat->add_option("--tgt-lang", pa.tgt_lang, "Target language code");
  preformat->add_flag("--unidirectional", pa.unidirectional, "Skip reverse-direction examples");

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Generate a labeled corrupted corpus");
  synth->add_option("--output-dir", sa.output_dir, "Output directory")->required();
  synth->add_option("--seed", sa.seed, "RNG seed");
  synth->add_option("--records", sa.records, "Template corpus size (without --src/--tgt)");
  synth->add_option("--src", sa.src, "Clean source file");
  synth->add_option("--tgt", sa.tgt, "Clean target file");
  synth->add_option("--src-lang", sa.src_lang, "Source language code");
  synth->add_option("--tgt-lang", sa.tgt_lang, "Target language code");
  synth->add_option("--dataset-id", sa.dataset_id, "Dataset id used in output file names");
  synth->add_option("--foreign", sa.foreign, "Foreign-language lines for FOREIGN_SWAP");
  synth->add_option("--rate", sa.rates, "CLASS=FRACTION, repeatable");
  synth->add_option("--profiles-dir", sa.profiles_dir, "Language profile directory");
  synth->add_flag("--no-verify", sa.no_verify, "Skip pre-filtering the clean input");

  EvaluateArgs ea;
  auto* eval = app.add_subcommand("evaluate", "Score an audit against synth labels");
  eval->add_option("--labels", ea.labels, "labels.tsv from synth")->required();
  eval->add_option("--audit", ea.audit, "audit.tsv from filter")->required();
  eval->add_option("--dataset", ea.dataset_id, "Only audit lines of this dataset");
  eval->add_option("--output", ea.output, "Metrics TSV path (default stdout)");

  BuildProfileArgs ba;
  auto* build = app.add_subcommand("build-profile", "Build a trigram profile from seed text");
  build->add_option("--lang", ba.lang, "Language code")->required();
  build->add_option("--input", ba.input, "Seed text, one line per sentence")->required();
  build->add_option("--output", ba.output, "Profile path (default <lang>.profile)");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate-manifest", "Check a manifest");
  validate_cmd->add_option("manifest,--manifest", validate_path, "Manifest JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*filter) return run_filter(fa);
    if (*preformat) return run_preformat(pa);
    if (*synth) return run_synth(sa);
    if (*eval) return run_evaluate(ea);
    if (*build) return run_build_profile(ba);
    if (*validate_cmd) return run_validate(validate_path);
  } catch (const BitextError& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

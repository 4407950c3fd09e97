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


// Throughput of the stateless filter chain on template sentences.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "bitext/pipeline.hpp"
#include "bitext/synthbench.hpp"

int main(int argc, char** argv) {
  using namespace bitext;
  CLI::App app{"Measure records/second through the per-record filters"};
  std::size_t records = 200000;
  std::size_t rounds = 3;
  std::string profiles_dir = BITEXT_DEFAULT_PROFILES_DIR;
  app.add_option("--records", records, "Pairs per round")->check(CLI::PositiveNumber);
  app.add_option("--rounds", rounds, "Timed rounds; the best one is reported")
      ->check(CLI::PositiveNumber);
  app.add_option("--profiles-dir", profiles_dir, "Language profiles");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto corpus = make_template_corpus(records, 1);
    std::size_t bytes = 0;
    for (const BitextRecord& r : corpus) bytes += r.src_text.size() + r.tgt_text.size();
    const LanguageDetector detector(load_profiles_dir(profiles_dir),
                                    DetectorOptions::from_config(LangScriptConfig{}));
    const RecordFilter chain(DatasetConfig{}, &detector);

    double best = 0.0;
    for (std::size_t round = 0; round < rounds; ++round) {
      std::size_t removed = 0;
      const auto t0 = std::chrono::steady_clock::now();
      for (const BitextRecord& r : corpus) removed += chain(r).removed();
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const double rate = static_cast<double>(corpus.size()) / secs;
      std::printf("round %zu: %.0f records/s (%.3f s, %zu removed)\n", round + 1, rate, secs,
                  removed);
      best = std::max(best, rate);
    }
    std::printf("records: %zu, mean pair length: %.1f bytes\n", corpus.size(),
                static_cast<double>(bytes) / static_cast<double>(corpus.size()));
    std::printf("best: %.0f records/s on one thread (target 50000)\n", best);
    return best >= 50000.0 ? 0 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

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

// JSON manifest loading. The accepted shape is documented in
// docs/manifest.schema.json. Errors name the offending field as a JSON
// pointer, e.g. "/datasets/2/content/max_chars: must be >= 1".

#pragma once

#include <filesystem>
#include <string_view>

#include "bitext/pipeline.hpp"

namespace bitext {

struct ManifestOptions {
  // Relative paths in the manifest resolve against this directory.
  std::filesystem::path base_dir;
  // Require input files (and list files) to exist.
  bool check_files = true;
};

// Throws BitextError(kInvalidManifest).
DatasetManifest parse_manifest(std::string_view json_text, const ManifestOptions& options);
DatasetManifest load_manifest(const std::filesystem::path& path, bool check_files = true);

}  // namespace bitext

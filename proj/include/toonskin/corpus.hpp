// Copyright 2026 The Toonskin Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOONSKIN_CORPUS_HPP_
#define TOONSKIN_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <vector>

#include "toonskin/ground_truth.hpp"

namespace toonskin {

struct ManifestEntry {
  std::filesystem::path original;
  std::optional<std::filesystem::path> annotated;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

// Pairs every supported image `name.<ext>` in `dir` with `name.gt.<ext>`,
// looked up in `gt_dir` when given, else next to the original. The same
// extension is tried first, then the other supported ones. Entries are
// sorted by path.
CorpusManifest discover_corpus(
    const std::filesystem::path& dir,
    const std::optional<std::filesystem::path>& gt_dir = std::nullopt);

// One `original_path[,annotated_path]` per line; `#` starts a comment and
// blank lines are skipped. Relative paths resolve against the manifest's
// directory. Throws ParseError on duplicates or malformed lines.
CorpusManifest read_manifest(const std::filesystem::path& file);

// Decodes every pair. Throws InvalidPairError listing all entries without an
// annotation, and IoError naming the first file that fails to decode.
std::vector<AnnotatedPair> load_corpus(const CorpusManifest& manifest,
                                       unsigned jobs = 1);

}  // namespace toonskin

#endif  // TOONSKIN_CORPUS_HPP_

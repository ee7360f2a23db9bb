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

#include "toonskin/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "toonskin/errors.hpp"
#include "toonskin/image_io.hpp"
#include "toonskin/parallel.hpp"

namespace toonskin {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kGtSuffix = ".gt";

bool is_annotation_file(const fs::path& p) {
  const std::string stem = p.stem().string();
  return stem.size() >= kGtSuffix.size() &&
         stem.compare(stem.size() - kGtSuffix.size(), kGtSuffix.size(),
                      kGtSuffix) == 0;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

CorpusManifest discover_corpus(const fs::path& dir,
                               const std::optional<fs::path>& gt_dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("corpus directory '" + dir.string() + "' does not exist");
  }
  std::vector<fs::path> originals;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path& p = entry.path();
    if (!entry.is_regular_file() || !is_supported_image(p)) continue;
    if (is_annotation_file(p)) continue;
    originals.push_back(p);
  }
  std::sort(originals.begin(), originals.end());

  const fs::path annotated_dir = gt_dir.value_or(dir);
  CorpusManifest manifest;
  for (const fs::path& original : originals) {
    ManifestEntry entry{original, std::nullopt};
    const std::string stem = original.stem().string() + std::string(kGtSuffix);
    std::vector<std::string> exts = {original.extension().string()};
    for (const char* e : {".png", ".jpg", ".jpeg", ".PNG", ".JPG", ".JPEG"}) {
      if (e != exts.front()) exts.emplace_back(e);
    }
    for (const std::string& ext : exts) {
      const fs::path candidate = annotated_dir / (stem + ext);
      if (fs::is_regular_file(candidate, ec)) {
        entry.annotated = candidate;
        break;
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest read_manifest(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read manifest '" + file.string() + "'");
  const fs::path base = file.parent_path();
  auto resolve = [&](const std::string& s) {
    const fs::path p(s);
    return p.is_absolute() ? p : base / p;
  };

  CorpusManifest manifest;
  std::set<fs::path> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string content = trim(line);
    if (content.empty()) continue;

    const auto comma = content.find(',');
    const std::string original = trim(content.substr(0, comma));
    std::optional<std::string> annotated;
    if (comma != std::string::npos) {
      annotated = trim(content.substr(comma + 1));
      if (annotated->find(',') != std::string::npos) {
        throw ParseError(file.string() + ":" + std::to_string(line_no) +
                         ": expected at most two paths");
      }
      if (annotated->empty()) annotated.reset();
    }
    if (original.empty()) {
      throw ParseError(file.string() + ":" + std::to_string(line_no) +
                       ": missing original path");
    }
    ManifestEntry entry{resolve(original), std::nullopt};
    if (annotated) entry.annotated = resolve(*annotated);
    const fs::path key = entry.original.lexically_normal();
    if (!seen.insert(key).second) {
      throw ParseError(file.string() + ":" + std::to_string(line_no) +
                       ": duplicate entry '" + original + "'");
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

std::vector<AnnotatedPair> load_corpus(const CorpusManifest& manifest,
                                       unsigned jobs) {
  if (manifest.entries.empty()) throw EmptyDatasetError("corpus is empty");
  std::string unpaired;
  for (const ManifestEntry& e : manifest.entries) {
    if (!e.annotated) unpaired += "\n  " + e.original.string();
  }
  if (!unpaired.empty()) {
    throw InvalidPairError("no annotation found for:" + unpaired);
  }

  std::vector<std::optional<AnnotatedPair>> loaded(manifest.entries.size());
  parallel_for(loaded.size(), jobs, [&](std::size_t i) {
    const ManifestEntry& e = manifest.entries[i];
    loaded[i].emplace(AnnotatedPair{e.original.filename().string(),
                                    read_image(e.original),
                                    read_image(*e.annotated)});
  });
  std::vector<AnnotatedPair> pairs;
  pairs.reserve(loaded.size());
  for (auto& p : loaded) pairs.push_back(std::move(*p));
  return pairs;
}

}  // namespace toonskin

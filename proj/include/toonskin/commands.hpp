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

#ifndef TOONSKIN_COMMANDS_HPP_
#define TOONSKIN_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toonskin/classifiers.hpp"
#include "toonskin/evaluation.hpp"
#include "toonskin/segmentation.hpp"

namespace toonskin::cli {

// Every command returns the process exit status: 0 iff every requested file
// succeeded. Per-file failures are reported on `err` and processing
// continues with the remaining files.

struct ClassifyOptions {
  std::vector<std::filesystem::path> inputs;
  std::vector<ClassifierId> classifiers;
  std::filesystem::path out_dir = ".";
  unsigned jobs = 1;
};

// Writes `<stem>.<classifier>.mask.png` per input and classifier.
int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err);

struct ExtractGtOptions {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_dir = ".";
  unsigned jobs = 1;
};

// Writes `<stem>.mask.png` per annotated input.
int cmd_extract_gt(const ExtractGtOptions& options, std::ostream& out,
                   std::ostream& err);

struct SegmentOptions {
  std::vector<std::filesystem::path> inputs;
  CannyParams canny;
  double skin_fraction = kDefaultSkinFraction;
  std::filesystem::path out_dir = ".";
  unsigned jobs = 1;
};

// Writes `<stem>.takayama-segment.mask.png` per input.
int cmd_segment(const SegmentOptions& options, std::ostream& out,
                std::ostream& err);

enum class ReportFormat { kCsv, kJson };

struct EvaluateOptions {
  // A corpus directory, or a manifest file.
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> gt_dir;
  std::vector<ClassifierId> classifiers;
  // Defaults to `<out_dir>/report.<csv|json>`.
  std::optional<std::filesystem::path> report_path;
  std::filesystem::path out_dir = ".";
  ReportFormat format = ReportFormat::kCsv;
  CompareOptions compare;
  int pair_tolerance = kDefaultPairTolerance;
  bool skip_validation = false;
};

// Writes the report file and prints the summary table to `out`.
int cmd_evaluate(const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err);

std::filesystem::path mask_output_path(const std::filesystem::path& out_dir,
                                       const std::filesystem::path& input,
                                       const std::string& tag);

}  // namespace toonskin::cli

#endif  // TOONSKIN_COMMANDS_HPP_

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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toonskin/classifiers.hpp"
#include "toonskin/commands.hpp"
#include "toonskin/errors.hpp"
#include "toonskin/synthetic.hpp"

namespace {

using toonskin::ClassifierId;

// `--classifier a --classifier b` or `--classifiers all` / `--classifiers a,b`.
std::vector<ClassifierId> resolve_classifiers(
    const std::vector<std::string>& single,
    const std::vector<std::string>& multi) {
  std::vector<ClassifierId> ids;
  for (const auto& name : multi) {
    if (name == "all") {
      const auto all = toonskin::list_classifiers();
      ids.insert(ids.end(), all.begin(), all.end());
    } else {
      ids.push_back(toonskin::parse_classifier(name));
    }
  }
  for (const auto& name : single) {
    ids.push_back(toonskin::parse_classifier(name));
  }
  return ids;
}

void add_canny_flags(CLI::App* cmd, toonskin::CannyParams& canny,
                     double& skin_fraction) {
  cmd->add_option("--sigma", canny.gaussian_sigma,
                  "Gaussian sigma for edge detection")
      ->capture_default_str();
  cmd->add_option("--low", canny.low_threshold,
                  "Low hysteresis threshold (fraction of max gradient)")
      ->capture_default_str();
  cmd->add_option("--high", canny.high_threshold,
                  "High hysteresis threshold (fraction of max gradient)")
      ->capture_default_str();
  cmd->add_option("--skin-fraction", skin_fraction,
                  "Region is skin when its passing fraction exceeds this")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based skin colour classifiers for cartoon imagery"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  std::string out_dir = ".";
  std::vector<std::string> classifier;
  std::vector<std::string> classifiers;

  toonskin::cli::ClassifyOptions classify;
  std::vector<std::string> classify_inputs;
  auto* classify_cmd = app.add_subcommand("classify", "Render skin masks");
  classify_cmd->add_option("inputs", classify_inputs, "Input images")
      ->required();
  classify_cmd->add_option("--classifier", classifier, "Classifier id")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  classify_cmd->add_option("--classifiers", classifiers,
                           "Classifier ids or 'all'")
      ->delimiter(',')
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  toonskin::cli::ExtractGtOptions extract;
  std::vector<std::string> extract_inputs;
  auto* extract_cmd = app.add_subcommand(
      "extract-gt", "Recover ground-truth masks from annotated images");
  extract_cmd->add_option("inputs", extract_inputs, "Annotated images")
      ->required();

  toonskin::cli::SegmentOptions segment;
  std::vector<std::string> segment_inputs;
  auto* segment_cmd = app.add_subcommand(
      "segment", "Edge + flood-fill region segmentation with the HSV rule");
  segment_cmd->add_option("inputs", segment_inputs, "Input images")
      ->required();
  add_canny_flags(segment_cmd, segment.canny, segment.skin_fraction);

  toonskin::cli::EvaluateOptions evaluate;
  std::string corpus;
  std::string gt_dir;
  std::string report;
  std::string format = "csv";
  std::string takayama_mode = "pixel";
  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score classifiers against an annotated corpus");
  evaluate_cmd->add_option("corpus", corpus, "Corpus directory or manifest")
      ->required();
  evaluate_cmd->add_option("--gt-dir", gt_dir,
                           "Directory holding the name.gt.<ext> files");
  evaluate_cmd->add_option("--classifier", classifier, "Classifier id")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  evaluate_cmd
      ->add_option("--classifiers", classifiers, "Classifier ids or 'all'")
      ->delimiter(',')
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  evaluate_cmd->add_option("--report", report, "Report path");
  evaluate_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  evaluate_cmd
      ->add_option("--takayama-mode", takayama_mode,
                   "Score takayama with the pixel rule or the segmentation "
                   "pipeline")
      ->check(CLI::IsMember({"pixel", "segment"}))
      ->capture_default_str();
  evaluate_cmd
      ->add_option("--pair-tolerance", evaluate.pair_tolerance,
                   "Per-channel tolerance when validating pairs")
      ->capture_default_str();
  evaluate_cmd->add_flag("--skip-validation", evaluate.skip_validation,
                         "Do not validate original/annotated pairs");
  add_canny_flags(evaluate_cmd, evaluate.compare.canny,
                  evaluate.compare.skin_fraction);

  std::string synth_dir;
  std::size_t synth_count = 6;
  std::uint32_t synth_seed = 1;
  auto* synth_cmd = app.add_subcommand(
      "synth-corpus", "Generate a procedural annotated corpus");
  synth_cmd->add_option("dir", synth_dir, "Output directory")->required();
  synth_cmd->add_option("--count", synth_count, "Number of pairs")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_seed, "Base seed")
      ->capture_default_str();

  for (auto* cmd : {classify_cmd, extract_cmd, segment_cmd, evaluate_cmd}) {
    cmd->add_option("--out", out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "Parallel file workers")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      classify.inputs.assign(classify_inputs.begin(), classify_inputs.end());
      classify.classifiers = resolve_classifiers(classifier, classifiers);
      if (classify.classifiers.empty()) {
        std::cerr << "error: --classifier or --classifiers is required\n";
        return 2;
      }
      classify.out_dir = out_dir;
      classify.jobs = jobs;
      return toonskin::cli::cmd_classify(classify, std::cout, std::cerr);
    }
    if (*extract_cmd) {
      extract.inputs.assign(extract_inputs.begin(), extract_inputs.end());
      extract.out_dir = out_dir;
      extract.jobs = jobs;
      return toonskin::cli::cmd_extract_gt(extract, std::cout, std::cerr);
    }
    if (*segment_cmd) {
      segment.inputs.assign(segment_inputs.begin(), segment_inputs.end());
      segment.out_dir = out_dir;
      segment.jobs = jobs;
      return toonskin::cli::cmd_segment(segment, std::cout, std::cerr);
    }
    if (*evaluate_cmd) {
      evaluate.corpus = corpus;
      if (!gt_dir.empty()) evaluate.gt_dir = gt_dir;
      evaluate.classifiers = resolve_classifiers(classifier, classifiers);
      if (evaluate.classifiers.empty()) {
        const auto all = toonskin::list_classifiers();
        evaluate.classifiers.assign(all.begin(), all.end());
      }
      if (!report.empty()) evaluate.report_path = report;
      evaluate.out_dir = out_dir;
      evaluate.format = format == "json" ? toonskin::cli::ReportFormat::kJson
                                         : toonskin::cli::ReportFormat::kCsv;
      evaluate.compare.takayama_mode = takayama_mode == "segment"
                                           ? toonskin::TakayamaMode::kSegment
                                           : toonskin::TakayamaMode::kPixel;
      evaluate.compare.jobs = jobs;
      return toonskin::cli::cmd_evaluate(evaluate, std::cout, std::cerr);
    }
    if (*synth_cmd) {
      toonskin::synthetic::write_corpus(synth_dir, synth_count, synth_seed);
      return 0;
    }
  } catch (const toonskin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

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

#include "toonskin/commands.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "toonskin/corpus.hpp"
#include "toonskin/errors.hpp"
#include "toonskin/ground_truth.hpp"
#include "toonskin/image_io.hpp"
#include "toonskin/parallel.hpp"
#include "toonskin/report.hpp"

namespace toonskin::cli {

namespace fs = std::filesystem;

namespace {

// Runs `work` per input, collecting per-file errors instead of stopping.
template <typename Work>
int for_each_input(const std::vector<fs::path>& inputs, unsigned jobs,
                   std::ostream& out, std::ostream& err, Work&& work) {
  std::vector<std::string> messages(inputs.size());
  std::vector<std::string> failures(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    try {
      messages[i] = work(inputs[i]);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });
  int status = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!failures[i].empty()) {
      err << "error: " << inputs[i].string() << ": " << failures[i] << '\n';
      status = 1;
    } else {
      out << messages[i];
    }
  }
  return status;
}

void ensure_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir.string() +
                  "': " + ec.message());
  }
}

}  // namespace

fs::path mask_output_path(const fs::path& out_dir, const fs::path& input,
                          const std::string& tag) {
  std::string name = input.stem().string();
  if (!tag.empty()) name += "." + tag;
  return out_dir / (name + ".mask.png");
}

int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err) {
  ensure_out_dir(options.out_dir);
  return for_each_input(
      options.inputs, options.jobs, out, err, [&](const fs::path& input) {
        const RasterImage image = read_image(input);
        std::string log;
        for (ClassifierId id : options.classifiers) {
          const fs::path target = mask_output_path(
              options.out_dir, input, std::string(to_string(id)));
          const BinaryMask mask = classify_image(image, id);
          write_mask(target, mask);
          log += target.string() + " (" + std::to_string(mask.count()) +
                 " skin pixels)\n";
        }
        return log;
      });
}

int cmd_extract_gt(const ExtractGtOptions& options, std::ostream& out,
                   std::ostream& err) {
  ensure_out_dir(options.out_dir);
  return for_each_input(
      options.inputs, options.jobs, out, err, [&](const fs::path& input) {
        const BinaryMask mask = extract_ground_truth(read_image(input));
        const fs::path target = mask_output_path(options.out_dir, input, "");
        write_mask(target, mask);
        return target.string() + " (" + std::to_string(mask.count()) +
               " skin pixels)\n";
      });
}

int cmd_segment(const SegmentOptions& options, std::ostream& out,
                std::ostream& err) {
  options.canny.validate();
  ensure_out_dir(options.out_dir);
  return for_each_input(
      options.inputs, options.jobs, out, err, [&](const fs::path& input) {
        const BinaryMask mask = takayama_segment(
            read_image(input), options.canny, options.skin_fraction);
        const fs::path target =
            mask_output_path(options.out_dir, input, "takayama-segment");
        write_mask(target, mask);
        return target.string() + " (" + std::to_string(mask.count()) +
               " skin pixels)\n";
      });
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out,
                 std::ostream& err) {
  try {
    const unsigned jobs = options.compare.jobs;
    std::error_code ec;
    const CorpusManifest manifest =
        fs::is_directory(options.corpus, ec)
            ? discover_corpus(options.corpus, options.gt_dir)
            : read_manifest(options.corpus);
    const std::vector<AnnotatedPair> corpus = load_corpus(manifest, jobs);

    if (!options.skip_validation) {
      std::vector<std::string> problems(corpus.size());
      parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        try {
          const PairValidation v =
              validate_pair(corpus[i], options.pair_tolerance);
          if (!v.valid()) {
            problems[i] = std::to_string(v.deviations) +
                          " non-marker pixels differ from the original by "
                          "more than " +
                          std::to_string(options.pair_tolerance);
          }
        } catch (const InvalidPairError& e) {
          problems[i] = e.what();
        }
      });
      std::string message;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!problems[i].empty()) {
          message += "\n  " + corpus[i].name + ": " + problems[i];
        }
      }
      if (!message.empty()) throw InvalidPairError("invalid pairs:" + message);
    }

    const DatasetReport report =
        compare_classifiers(corpus, options.classifiers, options.compare);

    const bool json = options.format == ReportFormat::kJson;
    fs::path target = options.report_path.value_or(
        options.out_dir / (json ? "report.json" : "report.csv"));
    if (target.has_parent_path()) ensure_out_dir(target.parent_path());
    std::ofstream file(target, std::ios::binary);
    if (!file) throw IoError("cannot write '" + target.string() + "'");
    file << (json ? report_to_json(report) : report_to_csv(report));
    file.close();
    if (!file) throw IoError("cannot write '" + target.string() + "'");

    out << format_summary(report);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace toonskin::cli

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

#include "toonskin/evaluation.hpp"

#include <limits>
#include <string>

#include "toonskin/errors.hpp"
#include "toonskin/parallel.hpp"

namespace toonskin {

EvalCounts evaluate_image(const BinaryMask& predicted,
                          const BinaryMask& ground_truth) {
  if (!predicted.same_shape(ground_truth)) {
    throw InvalidPairError(
        "mask shape mismatch: predicted " + std::to_string(predicted.width()) +
        "x" + std::to_string(predicted.height()) + ", ground truth " +
        std::to_string(ground_truth.width()) + "x" +
        std::to_string(ground_truth.height()));
  }
  EvalCounts c;
  const auto p = predicted.flags();
  const auto g = ground_truth.flags();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const unsigned cell = (p[i] << 1) | g[i];
    switch (cell) {
      case 0b11: ++c.tp; break;
      case 0b10: ++c.fp; break;
      case 0b01: ++c.fn; break;
      default: ++c.tn; break;
    }
  }
  c.gt_skin = c.tp + c.fn;
  c.total = p.size();
  return c;
}

RateSummary rates_from_counts(const EvalCounts& sum) {
  RateSummary s;
  s.sum = sum;
  s.tp_rate_defined = sum.gt_skin > 0;
  s.tp_rate = s.tp_rate_defined
                  ? static_cast<double>(sum.tp) / static_cast<double>(sum.gt_skin)
                  : std::numeric_limits<double>::quiet_NaN();
  s.fp_rate = sum.total > 0 ? static_cast<double>(sum.fp) /
                                  static_cast<double>(sum.total)
                            : 0.0;
  const std::uint64_t nonskin = sum.fp + sum.tn;
  s.fp_rate_nonskin = nonskin > 0 ? static_cast<double>(sum.fp) /
                                        static_cast<double>(nonskin)
                                  : 0.0;
  return s;
}

RateSummary aggregate(std::span<const EvalCounts> counts) {
  if (counts.empty()) throw EmptyDatasetError("no images to aggregate");
  EvalCounts sum;
  for (const EvalCounts& c : counts) sum += c;
  return rates_from_counts(sum);
}

BinaryMask predict(const RasterImage& image, ClassifierId id,
                   const CompareOptions& options) {
  if (id == ClassifierId::kTakayama &&
      options.takayama_mode == TakayamaMode::kSegment) {
    return takayama_segment(image, options.canny, options.skin_fraction);
  }
  return classify_image(image, id);
}

DatasetReport compare_classifiers(std::span<const AnnotatedPair> corpus,
                                  std::span<const ClassifierId> ids,
                                  const CompareOptions& options) {
  if (corpus.empty()) throw EmptyDatasetError("corpus is empty");

  DatasetReport report;
  report.takayama_mode = options.takayama_mode;
  report.images.resize(corpus.size());

  parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
    const AnnotatedPair& pair = corpus[i];
    ImageBreakdown& row = report.images[i];
    row.name = pair.name;
    try {
      if (pair.original.width() != pair.annotated.width() ||
          pair.original.height() != pair.annotated.height()) {
        validate_pair(pair);  // throws with the dimensions
      }
      const BinaryMask truth = extract_ground_truth(pair.annotated);
      row.counts.reserve(ids.size());
      for (ClassifierId id : ids) {
        row.counts.push_back(
            evaluate_image(predict(pair.original, id, options), truth));
      }
    } catch (const InvalidPairError& e) {
      throw InvalidPairError(pair.name + ": " + e.what());
    } catch (const TooSmallError& e) {
      throw TooSmallError(pair.name + ": " + e.what());
    } catch (const Error& e) {
      throw Error(pair.name + ": " + e.what());
    }
  });

  for (std::size_t k = 0; k < ids.size(); ++k) {
    EvalCounts sum;
    for (const ImageBreakdown& img : report.images) sum += img.counts[k];
    report.rows.push_back({ids[k], rates_from_counts(sum)});
  }
  for (const ImageBreakdown& img : report.images) {
    if (!img.counts.empty()) {
      report.gt_skin_total += img.counts.front().gt_skin;
      report.pixel_total += img.counts.front().total;
    }
  }
  if (ids.empty()) {
    for (const AnnotatedPair& pair : corpus) {
      report.gt_skin_total += extract_ground_truth(pair.annotated).count();
      report.pixel_total += pair.original.size();
    }
  }
  return report;
}

}  // namespace toonskin

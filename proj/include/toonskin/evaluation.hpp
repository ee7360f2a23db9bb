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

#ifndef TOONSKIN_EVALUATION_HPP_
#define TOONSKIN_EVALUATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toonskin/classifiers.hpp"
#include "toonskin/ground_truth.hpp"
#include "toonskin/segmentation.hpp"
#include "toonskin/types.hpp"

namespace toonskin {

// Pixel confusion tallies. Only tp and fp are published metrics; fn and tn
// complete the table so the identities below can be checked.
struct EvalCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  std::uint64_t gt_skin = 0;
  std::uint64_t total = 0;

  // tp + fn == gt_skin and tp + fp + fn + tn == total.
  bool consistent() const {
    return tp + fn == gt_skin && tp + fp + fn + tn == total;
  }

  EvalCounts& operator+=(const EvalCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    gt_skin += o.gt_skin;
    total += o.total;
    return *this;
  }

  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

// Throws InvalidPairError when the masks differ in shape.
EvalCounts evaluate_image(const BinaryMask& predicted,
                          const BinaryMask& ground_truth);

// Corpus-level rates computed once from exact integer sums.
//   tp_rate = sum(tp) / sum(gt_skin)     (NaN with tp_rate_defined = false
//                                         when there is no skin at all)
//   fp_rate = sum(fp) / sum(total)       (denominator includes skin pixels)
// fp_rate_nonskin is the conventional fp / (fp + tn); it is reported as an
// extra, clearly labelled column and is not one of the published metrics.
struct RateSummary {
  EvalCounts sum;
  double tp_rate = 0.0;
  bool tp_rate_defined = false;
  double fp_rate = 0.0;
  double fp_rate_nonskin = 0.0;
};

RateSummary rates_from_counts(const EvalCounts& sum);

// Throws EmptyDatasetError on an empty list.
RateSummary aggregate(std::span<const EvalCounts> counts);

enum class TakayamaMode { kPixel, kSegment };

struct CompareOptions {
  TakayamaMode takayama_mode = TakayamaMode::kPixel;
  CannyParams canny;
  double skin_fraction = kDefaultSkinFraction;
  unsigned jobs = 1;
};

struct ClassifierRow {
  ClassifierId id;
  RateSummary summary;
};

struct ImageBreakdown {
  std::string name;
  // One entry per report row, same order.
  std::vector<EvalCounts> counts;
};

struct DatasetReport {
  std::vector<ClassifierRow> rows;
  std::vector<ImageBreakdown> images;
  std::uint64_t gt_skin_total = 0;
  std::uint64_t pixel_total = 0;
  TakayamaMode takayama_mode = TakayamaMode::kPixel;
};

// Prediction used for one classifier in a comparison run.
BinaryMask predict(const RasterImage& image, ClassifierId id,
                   const CompareOptions& options);

// Runs every classifier over every original, scores it against the ground
// truth extracted from the annotated copy, and aggregates per classifier.
// Rows follow `ids`. Errors are rethrown with the offending pair's name.
DatasetReport compare_classifiers(std::span<const AnnotatedPair> corpus,
                                  std::span<const ClassifierId> ids,
                                  const CompareOptions& options = {});

}  // namespace toonskin

#endif  // TOONSKIN_EVALUATION_HPP_

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

#include "toonskin/ground_truth.hpp"

#include <cstdlib>
#include <string>

#include "toonskin/errors.hpp"

namespace toonskin {

BinaryMask extract_ground_truth(const RasterImage& annotated) {
  BinaryMask mask(annotated.width(), annotated.height());
  const auto pixels = annotated.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    mask.set_index(i, is_annotation_marker(pixels[i]));
  }
  return mask;
}

PairValidation validate_pair(const RasterImage& original,
                             const RasterImage& annotated, int tolerance) {
  if (original.width() != annotated.width() ||
      original.height() != annotated.height()) {
    throw InvalidPairError(
        "dimension mismatch: original " + std::to_string(original.width()) +
        "x" + std::to_string(original.height()) + ", annotated " +
        std::to_string(annotated.width()) + "x" +
        std::to_string(annotated.height()));
  }
  PairValidation report;
  const auto a = original.pixels();
  const auto b = annotated.pixels();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_annotation_marker(b[i])) {
      ++report.markers;
      continue;
    }
    const bool differs = std::abs(int{a[i].r} - int{b[i].r}) > tolerance ||
                         std::abs(int{a[i].g} - int{b[i].g}) > tolerance ||
                         std::abs(int{a[i].b} - int{b[i].b}) > tolerance;
    if (differs) ++report.deviations;
  }
  return report;
}

}  // namespace toonskin

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

#ifndef TOONSKIN_GROUND_TRUTH_HPP_
#define TOONSKIN_GROUND_TRUTH_HPP_

#include <cstddef>
#include <string>

#include "toonskin/types.hpp"

namespace toonskin {

// An original image and its hand-painted copy, where skin was painted with
// (0,255,0) or (255,255,0). `name` identifies the pair in error messages.
struct AnnotatedPair {
  std::string name;
  RasterImage original;
  RasterImage annotated;
};

// Marker test with slack for re-encoding:
// (R < 120 and G > 200 and B < 100) or (R > 200 and G > 200 and B < 100).
constexpr bool is_annotation_marker(Rgb8 p) {
  return (p.r < 120 && p.g > 200 && p.b < 100) ||
         (p.r > 200 && p.g > 200 && p.b < 100);
}

BinaryMask extract_ground_truth(const RasterImage& annotated);

inline constexpr int kDefaultPairTolerance = 2;

struct PairValidation {
  // Non-marker pixels of the annotated image whose channels differ from the
  // original by more than the tolerance.
  std::size_t deviations = 0;
  std::size_t markers = 0;
  bool valid() const { return deviations == 0; }
};

// Throws InvalidPairError on a dimension mismatch.
PairValidation validate_pair(const RasterImage& original,
                             const RasterImage& annotated,
                             int tolerance = kDefaultPairTolerance);

inline PairValidation validate_pair(const AnnotatedPair& pair,
                                    int tolerance = kDefaultPairTolerance) {
  return validate_pair(pair.original, pair.annotated, tolerance);
}

}  // namespace toonskin

#endif  // TOONSKIN_GROUND_TRUTH_HPP_

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

#ifndef TOONSKIN_SEGMENTATION_HPP_
#define TOONSKIN_SEGMENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toonskin/types.hpp"

namespace toonskin {

// Intensity image with values in [0, 1].
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, double fill = 0.0);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  double at(std::size_t x, std::size_t y) const {
    return values_[y * width_ + x];
  }
  double& at(std::size_t x, std::size_t y) { return values_[y * width_ + x]; }

  std::span<const double> values() const { return values_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> values_;
};

// Thresholds are fractions of the image's maximum gradient magnitude.
struct CannyParams {
  double gaussian_sigma = 1.4;
  double low_threshold = 0.10;
  double high_threshold = 0.30;

  // Throws ParseError unless sigma > 0 and 0 < low <= high <= 1.
  void validate() const;
};

// 0 marks an edge pixel; regions are numbered 1..region_count.
struct RegionLabels {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t region_count = 0;
  std::vector<std::uint32_t> labels;

  std::uint32_t at(std::size_t x, std::size_t y) const {
    return labels[y * width + x];
  }
};

inline constexpr double kDefaultSkinFraction = 0.5;

// BT.601 luma scaled to [0, 1].
GrayImage to_grayscale(const RasterImage& image);

// Gaussian blur (radius ceil(3 sigma), replicated border), 3x3 Sobel,
// four-direction non-maximum suppression, and 8-connected double-threshold
// hysteresis. Throws TooSmallError below 3x3.
BinaryMask canny_edges(const GrayImage& gray, const CannyParams& params = {});

// Labels the 4-connected components of non-edge pixels in raster-scan order
// of first encounter.
RegionLabels flood_fill_regions(const BinaryMask& edges);

// Edge detection, region labelling, then a region is skin iff the fraction of
// its pixels passing the Takayama HSV rule is strictly greater than
// `skin_fraction`. Edge pixels are never skin.
BinaryMask takayama_segment(const RasterImage& image,
                            const CannyParams& params = {},
                            double skin_fraction = kDefaultSkinFraction);

}  // namespace toonskin

#endif  // TOONSKIN_SEGMENTATION_HPP_

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

#include "toonskin/types.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "toonskin/errors.hpp"

namespace toonskin {

namespace {

void check_dimensions(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw InvalidDimensionError("invalid dimension " + std::to_string(width) +
                                "x" + std::to_string(height));
  }
}

}  // namespace

RasterImage::RasterImage(std::size_t width, std::size_t height, Rgb8 fill)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  pixels_.assign(width * height, fill);
}

RasterImage::RasterImage(std::size_t width, std::size_t height,
                         std::vector<Rgb8> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height);
  if (pixels_.size() != width * height) {
    throw InvalidDimensionError("pixel count " + std::to_string(pixels_.size()) +
                                " does not match " + std::to_string(width) +
                                "x" + std::to_string(height));
  }
}

BinaryMask::BinaryMask(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  check_dimensions(width, height);
  flags_.assign(width * height, 0);
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(
      std::count(flags_.begin(), flags_.end(), std::uint8_t{1}));
}

}  // namespace toonskin

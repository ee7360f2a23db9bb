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

#ifndef TOONSKIN_TYPES_HPP_
#define TOONSKIN_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace toonskin {

// One 8-bit-per-channel colour sample.
struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb8&, const Rgb8&) = default;
};

// Hue in degrees [0, 360); saturation and value in [0, 1].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

// Row-major 3-channel image. Width and height are always >= 1.
class RasterImage {
 public:
  // Throws InvalidDimensionError when either dimension is zero.
  RasterImage(std::size_t width, std::size_t height, Rgb8 fill = {});
  RasterImage(std::size_t width, std::size_t height, std::vector<Rgb8> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  const Rgb8& at(std::size_t x, std::size_t y) const {
    return pixels_[y * width_ + x];
  }
  Rgb8& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

  std::span<const Rgb8> pixels() const { return pixels_; }
  std::span<Rgb8> pixels() { return pixels_; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rgb8> pixels_;
};

// Per-pixel skin flags, one byte per pixel in row-major order, each 0 or 1.
class BinaryMask {
 public:
  // All flags start at 0. Throws InvalidDimensionError on a zero dimension.
  BinaryMask(std::size_t width, std::size_t height);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return flags_.size(); }

  bool at(std::size_t x, std::size_t y) const {
    return flags_[y * width_ + x] != 0;
  }
  void set(std::size_t x, std::size_t y, bool skin) {
    flags_[y * width_ + x] = skin ? 1 : 0;
  }
  bool at_index(std::size_t i) const { return flags_[i] != 0; }
  void set_index(std::size_t i, bool skin) { flags_[i] = skin ? 1 : 0; }

  std::span<const std::uint8_t> flags() const { return flags_; }

  // Number of flags equal to 1.
  std::size_t count() const;

  bool same_shape(const BinaryMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> flags_;
};

inline BinaryMask mask_new(std::size_t width, std::size_t height) {
  return BinaryMask(width, height);
}

inline std::size_t mask_count(const BinaryMask& mask) { return mask.count(); }

}  // namespace toonskin

#endif  // TOONSKIN_TYPES_HPP_

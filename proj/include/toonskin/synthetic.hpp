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

#ifndef TOONSKIN_SYNTHETIC_HPP_
#define TOONSKIN_SYNTHETIC_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "toonskin/ground_truth.hpp"
#include "toonskin/types.hpp"

namespace toonskin::synthetic {

// Filled disk of `fill` centred in a `background` canvas. A pixel belongs to
// the disk when (x - cx)^2 + (y - cy)^2 <= radius^2 with cx = width / 2,
// cy = height / 2.
RasterImage disk_image(std::size_t width, std::size_t height,
                       std::size_t radius, Rgb8 fill, Rgb8 background);
BinaryMask disk_mask(std::size_t width, std::size_t height,
                     std::size_t radius);

struct Figure {
  RasterImage original;
  RasterImage annotated;
  BinaryMask skin;
};

// Procedural cartoon figure: outlined head, neck and arms in a skin tone
// with shading, hair, eyes, clothing and either a flat or a cluttered
// background. The annotated copy paints the skin pixels with one of the two
// marker colours. Deterministic for a given seed on every platform.
Figure make_figure(std::uint32_t seed);

// Writes `fig<NN>.png` and `fig<NN>.gt.png` for `count` figures.
void write_corpus(const std::filesystem::path& dir, std::size_t count,
                  std::uint32_t seed);

}  // namespace toonskin::synthetic

#endif  // TOONSKIN_SYNTHETIC_HPP_

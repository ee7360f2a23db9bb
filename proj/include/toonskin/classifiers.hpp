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

#ifndef TOONSKIN_CLASSIFIERS_HPP_
#define TOONSKIN_CLASSIFIERS_HPP_

#include <array>
#include <cstdlib>
#include <optional>
#include <string_view>

#include "toonskin/colorspace.hpp"
#include "toonskin/types.hpp"

namespace toonskin {

// The eight per-pixel skin rules. Names are a stable CLI contract.
enum class ClassifierId {
  kKovac,
  kSwift,
  kSaleh,
  kOsman,
  kTakayama,
  kMethod1,
  kMethod2,
  kMethod3,
};

inline constexpr std::array<ClassifierId, 8> kAllClassifiers = {
    ClassifierId::kKovac,    ClassifierId::kSwift,   ClassifierId::kSaleh,
    ClassifierId::kOsman,    ClassifierId::kTakayama, ClassifierId::kMethod1,
    ClassifierId::kMethod2,  ClassifierId::kMethod3,
};

// Registry order: kovac, swift, saleh, osman, takayama, method1..3.
constexpr std::span<const ClassifierId> list_classifiers() {
  return kAllClassifiers;
}

std::string_view to_string(ClassifierId id);
std::optional<ClassifierId> try_parse_classifier(std::string_view name);
// Throws ParseError for names outside the registry.
ClassifierId parse_classifier(std::string_view name);

// All rules use integer arithmetic on the raw channels; inequalities are
// strict exactly where the published rule writes them strict.

constexpr bool classify_kovac(Rgb8 p) {
  const int r = p.r, g = p.g, b = p.b;
  const int hi = r > g ? (r > b ? r : b) : (g > b ? g : b);
  const int lo = r < g ? (r < b ? r : b) : (g < b ? g : b);
  const int rg = r - g;
  return r > 95 && g > 40 && b > 20 && hi - lo > 15 &&
         (rg < 0 ? -rg : rg) > 15 && r > g && r > b;
}

// Swift lists exclusions; a pixel is skin when none fires. B < R/4 is
// evaluated as 4B < R.
constexpr bool classify_swift(Rgb8 p) {
  const int r = p.r, g = p.g, b = p.b;
  const bool excluded = b > r || g < b || g > r || 4 * b < r || b > 200;
  return !excluded;
}

constexpr bool classify_saleh(Rgb8 p) {
  const int d = int{p.r} - int{p.g};
  return d > 20 && d < 80;
}

// 0 <= (R-G)/(R+G) <= 0.5 and B/(R+G) <= 0.5, cross-multiplied.
// R + G == 0 is non-skin.
constexpr bool classify_osman(Rgb8 p) {
  const int r = p.r, g = p.g, b = p.b;
  const int sum = r + g;
  if (sum == 0) return false;
  return r >= g && 2 * (r - g) <= sum && 2 * b <= sum;
}

// Hue in [0, 40] degrees and value > 0.75.
inline bool classify_takayama_pixel(Rgb8 p) {
  const Hsv hsv = rgb_to_hsv(p);
  return hsv.h >= 0.0 && hsv.h <= 40.0 && hsv.v > 0.75;
}

namespace detail {
constexpr bool in_method_ranges(Rgb8 p) {
  return p.r > 120 && p.r < 255 && p.g > 90 && p.g < 250 && p.b > 70 &&
         p.b < 218;
}
}  // namespace detail

constexpr bool classify_method1(Rgb8 p) {
  return detail::in_method_ranges(p) && p.r > p.g + 10 && p.g > p.b + 10;
}

constexpr bool classify_method2(Rgb8 p) {
  return detail::in_method_ranges(p) && p.r > p.g + 10 && p.g > p.b;
}

constexpr bool classify_method3(Rgb8 p) {
  return detail::in_method_ranges(p) && p.r > p.g && p.g > p.b;
}

using PixelRule = bool (*)(Rgb8);

PixelRule pixel_rule(ClassifierId id);

inline bool classify_pixel(ClassifierId id, Rgb8 p) { return pixel_rule(id)(p); }

// Applies the per-pixel rule to every pixel. For kTakayama this is the pixel
// rule only; the edge/flood-fill pipeline lives in segmentation.hpp.
BinaryMask classify_image(const RasterImage& image, ClassifierId id);

}  // namespace toonskin

#endif  // TOONSKIN_CLASSIFIERS_HPP_

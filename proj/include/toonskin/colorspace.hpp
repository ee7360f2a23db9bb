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

#ifndef TOONSKIN_COLORSPACE_HPP_
#define TOONSKIN_COLORSPACE_HPP_

#include <algorithm>

#include "toonskin/types.hpp"

namespace toonskin {

// Hexcone RGB -> HSV. Achromatic pixels (R == G == B) get hue 0.
// The hue numerator is formed in integers and divided once, so hues that are
// exact rationals with an integer value (e.g. 40 for (255,170,0)) come out
// exact in double.
inline Hsv rgb_to_hsv(Rgb8 p) {
  const int r = p.r;
  const int g = p.g;
  const int b = p.b;
  const int hi = std::max({r, g, b});
  const int lo = std::min({r, g, b});
  const int chroma = hi - lo;

  Hsv out;
  out.v = hi / 255.0;
  out.s = hi == 0 ? 0.0 : static_cast<double>(chroma) / hi;
  if (chroma == 0) {
    out.h = 0.0;
    return out;
  }
  double h;
  if (hi == r) {
    h = 60.0 * (g - b) / chroma;
    if (h < 0.0) h += 360.0;
  } else if (hi == g) {
    h = 60.0 * (b - r + 2 * chroma) / chroma;
  } else {
    h = 60.0 * (r - g + 4 * chroma) / chroma;
  }
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

}  // namespace toonskin

#endif  // TOONSKIN_COLORSPACE_HPP_

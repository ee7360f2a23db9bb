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

#include "toonskin/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>

#include "toonskin/image_io.hpp"

namespace toonskin::synthetic {

namespace {

// std::mt19937 output is fully specified; the distributions are not, so
// ranges are drawn by hand.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() %
                                 static_cast<std::uint32_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937 engine_;
};

// The last two sit between the method thresholds: G - B <= 10 and
// R - G <= 10 respectively.
constexpr std::array<Rgb8, 10> kSkinTones = {{
    {255, 228, 206}, {252, 214, 186}, {246, 198, 166}, {236, 184, 148},
    {224, 168, 128}, {206, 150, 112}, {182, 128, 92},  {150, 104, 74},
    {248, 196, 188}, {238, 230, 206},
}};

Rgb8 pick_tone(Rng& rng) {
  return kSkinTones[rng.uniform(0, static_cast<int>(kSkinTones.size()) - 1)];
}

constexpr Rgb8 kOutline{28, 20, 24};

Rgb8 shade(Rgb8 c, int percent) {
  auto s = [&](int v) {
    return static_cast<std::uint8_t>(std::clamp(v * percent / 100, 0, 255));
  };
  return {s(c.r), s(c.g), s(c.b)};
}

Rgb8 random_color(Rng& rng) {
  for (;;) {
    Rgb8 c{static_cast<std::uint8_t>(rng.uniform(0, 255)),
           static_cast<std::uint8_t>(rng.uniform(0, 255)),
           static_cast<std::uint8_t>(rng.uniform(0, 255))};
    if (!is_annotation_marker(c)) return c;
  }
}

struct Canvas {
  RasterImage image;
  BinaryMask skin;

  void put(int x, int y, Rgb8 c, bool is_skin) {
    if (x < 0 || y < 0 || x >= static_cast<int>(image.width()) ||
        y >= static_cast<int>(image.height())) {
      return;
    }
    image.at(x, y) = c;
    skin.set(x, y, is_skin);
  }
};

bool in_ellipse(int x, int y, int cx, int cy, int rx, int ry) {
  const long dx = x - cx, dy = y - cy;
  return dx * dx * ry * ry + dy * dy * rx * rx <=
         static_cast<long>(rx) * rx * ry * ry;
}

// Filled ellipse with a one-pixel outline; the lower-right part is shaded.
void draw_ellipse(Canvas& canvas, int cx, int cy, int rx, int ry, Rgb8 fill,
                  bool is_skin, int shade_percent) {
  for (int y = cy - ry - 1; y <= cy + ry + 1; ++y) {
    for (int x = cx - rx - 1; x <= cx + rx + 1; ++x) {
      if (!in_ellipse(x, y, cx, cy, rx, ry)) continue;
      const bool border = !in_ellipse(x - 1, y, cx, cy, rx, ry) ||
                          !in_ellipse(x + 1, y, cx, cy, rx, ry) ||
                          !in_ellipse(x, y - 1, cx, cy, rx, ry) ||
                          !in_ellipse(x, y + 1, cx, cy, rx, ry);
      if (border) {
        canvas.put(x, y, kOutline, false);
      } else {
        const bool shaded = (x - cx) + (y - cy) > (rx + ry) / 3;
        canvas.put(x, y, shaded ? shade(fill, shade_percent) : fill, is_skin);
      }
    }
  }
}

void draw_rect(Canvas& canvas, int x0, int y0, int x1, int y1, Rgb8 fill,
               bool is_skin) {
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const bool border = x == x0 || x == x1 || y == y0 || y == y1;
      canvas.put(x, y, border ? kOutline : fill, border ? false : is_skin);
    }
  }
}

}  // namespace

RasterImage disk_image(std::size_t width, std::size_t height,
                       std::size_t radius, Rgb8 fill, Rgb8 background) {
  RasterImage image(width, height, background);
  const BinaryMask disk = disk_mask(width, height, radius);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (disk.at_index(i)) image.pixels()[i] = fill;
  }
  return image;
}

BinaryMask disk_mask(std::size_t width, std::size_t height,
                     std::size_t radius) {
  BinaryMask mask(width, height);
  const long cx = static_cast<long>(width / 2);
  const long cy = static_cast<long>(height / 2);
  const long r2 = static_cast<long>(radius * radius);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const long dx = static_cast<long>(x) - cx;
      const long dy = static_cast<long>(y) - cy;
      mask.set(x, y, dx * dx + dy * dy <= r2);
    }
  }
  return mask;
}

Figure make_figure(std::uint32_t seed) {
  Rng rng(seed);
  const int w = rng.uniform(104, 180);
  const int h = rng.uniform(99, 180);

  Canvas canvas{RasterImage(w, h, random_color(rng)), BinaryMask(w, h)};

  if (rng.coin()) {
    // Cluttered background, sometimes in skin-like tones.
    const int blocks = rng.uniform(4, 10);
    for (int i = 0; i < blocks; ++i) {
      const int x0 = rng.uniform(0, w - 1), y0 = rng.uniform(0, h - 1);
      const int x1 = std::min(w - 1, x0 + rng.uniform(8, w / 2));
      const int y1 = std::min(h - 1, y0 + rng.uniform(8, h / 2));
      const Rgb8 c = rng.uniform(0, 3) == 0
                         ? shade(pick_tone(rng), 90)
                         : random_color(rng);
      draw_rect(canvas, x0, y0, x1, y1, c, false);
    }
  }

  const Rgb8 skin = pick_tone(rng);
  const int shadow = rng.uniform(78, 92);
  const int cx = w / 2 + rng.uniform(-w / 10, w / 10);
  const int head_rx = std::max(10, w / 6 + rng.uniform(-3, 3));
  const int head_ry = std::max(12, h / 5 + rng.uniform(-3, 3));
  const int head_cy = head_ry + rng.uniform(6, 14);

  // Body and clothing.
  const Rgb8 cloth = random_color(rng);
  const int body_top = head_cy + head_ry + 6;
  draw_rect(canvas, cx - head_rx - 6, body_top, cx + head_rx + 6, h - 1, cloth,
            false);
  // Arms.
  const int arm_w = std::max(5, head_rx / 3);
  draw_rect(canvas, cx - head_rx - 6 - arm_w, body_top + 2, cx - head_rx - 6,
            std::min(h - 1, body_top + head_ry * 2), skin, true);
  draw_rect(canvas, cx + head_rx + 6, body_top + 2,
            cx + head_rx + 6 + arm_w, std::min(h - 1, body_top + head_ry * 2),
            shade(skin, shadow), true);
  // Neck then head on top.
  draw_rect(canvas, cx - head_rx / 3, head_cy + head_ry - 4, cx + head_rx / 3,
            body_top + 1, shade(skin, shadow), true);
  draw_ellipse(canvas, cx, head_cy, head_rx, head_ry, skin, true, shadow);

  // Hair cap over the top half of the head, sometimes close to skin tone.
  const Rgb8 hair = rng.uniform(0, 2) == 0 ? shade(skin, 70) : random_color(rng);
  for (int y = head_cy - head_ry - 4; y < head_cy - head_ry / 3; ++y) {
    for (int x = cx - head_rx - 4; x <= cx + head_rx + 4; ++x) {
      if (in_ellipse(x, y, cx, head_cy - 2, head_rx + 3, head_ry + 3)) {
        canvas.put(x, y, hair, false);
      }
    }
  }
  // Eyes and mouth.
  const int eye_y = head_cy + head_ry / 6;
  const Rgb8 iris = random_color(rng);
  draw_ellipse(canvas, cx - head_rx / 2, eye_y, std::max(2, head_rx / 6),
               std::max(3, head_ry / 5), iris, false, 60);
  draw_ellipse(canvas, cx + head_rx / 2, eye_y, std::max(2, head_rx / 6),
               std::max(3, head_ry / 5), iris, false, 60);
  for (int x = cx - head_rx / 4; x <= cx + head_rx / 4; ++x) {
    canvas.put(x, head_cy + head_ry / 2, Rgb8{170, 60, 70}, false);
  }

  const Rgb8 marker = rng.coin() ? Rgb8{0, 255, 0} : Rgb8{255, 255, 0};
  RasterImage annotated = canvas.image;
  for (std::size_t i = 0; i < annotated.size(); ++i) {
    if (canvas.skin.at_index(i)) annotated.pixels()[i] = marker;
  }
  return Figure{std::move(canvas.image), std::move(annotated),
                std::move(canvas.skin)};
}

void write_corpus(const std::filesystem::path& dir, std::size_t count,
                  std::uint32_t seed) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < count; ++i) {
    const Figure fig = make_figure(seed + static_cast<std::uint32_t>(i));
    char stem[32];
    std::snprintf(stem, sizeof stem, "fig%02zu", i);
    write_image(dir / (std::string(stem) + ".png"), fig.original);
    write_image(dir / (std::string(stem) + ".gt.png"), fig.annotated);
  }
}

}  // namespace toonskin::synthetic

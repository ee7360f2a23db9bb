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

#include "toonskin/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "toonskin/classifiers.hpp"
#include "toonskin/errors.hpp"

namespace toonskin {

namespace {

std::size_t clamp_index(std::ptrdiff_t i, std::size_t n) {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) >= n) return n - 1;
  return static_cast<std::size_t>(i);
}

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[i + radius] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

// Separable blur with replicated borders.
GrayImage blur(const GrayImage& in, double sigma) {
  const auto kernel = gaussian_kernel(sigma);
  const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  const std::size_t w = in.width(), h = in.height();
  GrayImage tmp(w, h), out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
        const auto xx = clamp_index(static_cast<std::ptrdiff_t>(x) + k, w);
        acc += kernel[k + radius] * in.at(xx, y);
      }
      tmp.at(x, y) = acc;
    }
  }
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
        const auto yy = clamp_index(static_cast<std::ptrdiff_t>(y) + k, h);
        acc += kernel[k + radius] * tmp.at(x, yy);
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    throw InvalidDimensionError("invalid dimension " + std::to_string(width) +
                                "x" + std::to_string(height));
  }
  values_.assign(width * height, fill);
}

void CannyParams::validate() const {
  if (!(gaussian_sigma > 0.0)) {
    throw ParseError("gaussian sigma must be > 0");
  }
  if (!(low_threshold > 0.0 && low_threshold <= high_threshold &&
        high_threshold <= 1.0)) {
    throw ParseError("canny thresholds must satisfy 0 < low <= high <= 1");
  }
}

GrayImage to_grayscale(const RasterImage& image) {
  GrayImage gray(image.width(), image.height());
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      const Rgb8 p = image.at(x, y);
      const double luma = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
      gray.at(x, y) = std::clamp(luma / 255.0, 0.0, 1.0);
    }
  }
  return gray;
}

BinaryMask canny_edges(const GrayImage& gray, const CannyParams& params) {
  params.validate();
  const std::size_t w = gray.width(), h = gray.height();
  if (w < 3 || h < 3) {
    throw TooSmallError("image " + std::to_string(w) + "x" +
                        std::to_string(h) + " is smaller than 3x3");
  }

  const GrayImage smooth = blur(gray, params.gaussian_sigma);

  // Sobel with replicated borders.
  std::vector<double> magnitude(w * h), gx(w * h), gy(w * h);
  double max_magnitude = 0.0;
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t ym = clamp_index(static_cast<std::ptrdiff_t>(y) - 1, h);
    const std::size_t yp = clamp_index(static_cast<std::ptrdiff_t>(y) + 1, h);
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t xm =
          clamp_index(static_cast<std::ptrdiff_t>(x) - 1, w);
      const std::size_t xp =
          clamp_index(static_cast<std::ptrdiff_t>(x) + 1, w);
      const double dx = (smooth.at(xp, ym) + 2.0 * smooth.at(xp, y) +
                         smooth.at(xp, yp)) -
                        (smooth.at(xm, ym) + 2.0 * smooth.at(xm, y) +
                         smooth.at(xm, yp));
      const double dy = (smooth.at(xm, yp) + 2.0 * smooth.at(x, yp) +
                         smooth.at(xp, yp)) -
                        (smooth.at(xm, ym) + 2.0 * smooth.at(x, ym) +
                         smooth.at(xp, ym));
      const std::size_t i = y * w + x;
      gx[i] = dx;
      gy[i] = dy;
      magnitude[i] = std::hypot(dx, dy);
      max_magnitude = std::max(max_magnitude, magnitude[i]);
    }
  }

  BinaryMask edges(w, h);
  if (max_magnitude <= 0.0) return edges;

  auto mag_at = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
    if (x < 0 || y < 0 || x >= static_cast<std::ptrdiff_t>(w) ||
        y >= static_cast<std::ptrdiff_t>(h)) {
      return 0.0;
    }
    return magnitude[static_cast<std::size_t>(y) * w +
                     static_cast<std::size_t>(x)];
  };

  // Non-maximum suppression. Direction is quantized to 0/45/90/135 degrees;
  // ties go to the pixel on the positive side so a plateau keeps one pixel.
  std::vector<double> thin(w * h, 0.0);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t i = y * w + x;
      const double m = magnitude[i];
      if (m <= 0.0) continue;
      double angle = std::atan2(gy[i], gx[i]) * 180.0 / M_PI;
      if (angle < 0.0) angle += 180.0;
      int dx, dy;
      if (angle < 22.5 || angle >= 157.5) {
        dx = 1, dy = 0;
      } else if (angle < 67.5) {
        dx = 1, dy = 1;
      } else if (angle < 112.5) {
        dx = 0, dy = 1;
      } else {
        dx = -1, dy = 1;
      }
      const auto sx = static_cast<std::ptrdiff_t>(x);
      const auto sy = static_cast<std::ptrdiff_t>(y);
      const double before = mag_at(sx - dx, sy - dy);
      const double after = mag_at(sx + dx, sy + dy);
      if (m > before && m >= after) thin[i] = m;
    }
  }

  const double high = params.high_threshold * max_magnitude;
  const double low = params.low_threshold * max_magnitude;

  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < w * h; ++i) {
    if (thin[i] >= high && thin[i] > 0.0 && !edges.at_index(i)) {
      edges.set_index(i, true);
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const auto x = static_cast<std::ptrdiff_t>(i % w);
    const auto y = static_cast<std::ptrdiff_t>(i / w);
    for (std::ptrdiff_t ny = y - 1; ny <= y + 1; ++ny) {
      for (std::ptrdiff_t nx = x - 1; nx <= x + 1; ++nx) {
        if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(w) ||
            ny >= static_cast<std::ptrdiff_t>(h)) {
          continue;
        }
        const std::size_t j =
            static_cast<std::size_t>(ny) * w + static_cast<std::size_t>(nx);
        if (!edges.at_index(j) && thin[j] >= low && thin[j] > 0.0) {
          edges.set_index(j, true);
          stack.push_back(j);
        }
      }
    }
  }
  return edges;
}

RegionLabels flood_fill_regions(const BinaryMask& edges) {
  const std::size_t w = edges.width(), h = edges.height();
  RegionLabels out;
  out.width = w;
  out.height = h;
  out.labels.assign(w * h, 0);

  std::vector<std::size_t> stack;
  std::uint32_t next = 0;
  for (std::size_t start = 0; start < w * h; ++start) {
    if (edges.at_index(start) || out.labels[start] != 0) continue;
    ++next;
    out.labels[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const std::size_t x = i % w, y = i / w;
      auto visit = [&](std::size_t j) {
        if (!edges.at_index(j) && out.labels[j] == 0) {
          out.labels[j] = next;
          stack.push_back(j);
        }
      };
      if (x > 0) visit(i - 1);
      if (x + 1 < w) visit(i + 1);
      if (y > 0) visit(i - w);
      if (y + 1 < h) visit(i + w);
    }
  }
  out.region_count = next;
  return out;
}

BinaryMask takayama_segment(const RasterImage& image, const CannyParams& params,
                            double skin_fraction) {
  if (!(skin_fraction >= 0.0 && skin_fraction <= 1.0)) {
    throw ParseError("skin fraction must lie in [0, 1]");
  }
  const BinaryMask edges = canny_edges(to_grayscale(image), params);
  const RegionLabels regions = flood_fill_regions(edges);

  std::vector<std::size_t> passing(regions.region_count + 1, 0);
  std::vector<std::size_t> sizes(regions.region_count + 1, 0);
  const auto pixels = image.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const std::uint32_t label = regions.labels[i];
    if (label == 0) continue;
    ++sizes[label];
    if (classify_takayama_pixel(pixels[i])) ++passing[label];
  }

  std::vector<bool> skin(regions.region_count + 1, false);
  for (std::size_t r = 1; r <= regions.region_count; ++r) {
    skin[r] = static_cast<double>(passing[r]) >
              skin_fraction * static_cast<double>(sizes[r]);
  }

  BinaryMask mask(image.width(), image.height());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    mask.set_index(i, skin[regions.labels[i]]);
  }
  return mask;
}

}  // namespace toonskin

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

#include "toonskin/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <system_error>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "toonskin/errors.hpp"

namespace toonskin {

namespace fs = std::filesystem;

namespace {

void ensure_exists(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw IoError("cannot read '" + path.string() + "': no such file");
  }
}

void write_mat(const fs::path& path, const cv::Mat& mat) {
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), mat);
  } catch (const cv::Exception& e) {
    throw IoError("cannot write '" + path.string() + "': " + e.what());
  }
  if (!ok) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace

bool is_supported_image(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

RasterImage read_image(const fs::path& path) {
  ensure_exists(path);
  cv::Mat bgr;
  try {
    bgr = cv::imread(path.string(),
                     cv::IMREAD_COLOR | cv::IMREAD_IGNORE_ORIENTATION);
  } catch (const cv::Exception& e) {
    throw IoError("cannot decode '" + path.string() + "': " + e.what());
  }
  if (bgr.empty()) throw IoError("cannot decode '" + path.string() + "'");

  std::vector<Rgb8> pixels(static_cast<std::size_t>(bgr.rows) * bgr.cols);
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      pixels[static_cast<std::size_t>(y) * bgr.cols + x] =
          Rgb8{row[x][2], row[x][1], row[x][0]};
    }
  }
  return RasterImage(bgr.cols, bgr.rows, std::move(pixels));
}

void write_image(const fs::path& path, const RasterImage& image) {
  cv::Mat bgr(static_cast<int>(image.height()), static_cast<int>(image.width()),
              CV_8UC3);
  for (std::size_t y = 0; y < image.height(); ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(static_cast<int>(y));
    for (std::size_t x = 0; x < image.width(); ++x) {
      const Rgb8 p = image.at(x, y);
      row[x] = cv::Vec3b(p.b, p.g, p.r);
    }
  }
  write_mat(path, bgr);
}

void write_mask(const fs::path& path, const BinaryMask& mask) {
  cv::Mat gray(static_cast<int>(mask.height()), static_cast<int>(mask.width()),
               CV_8UC1);
  for (std::size_t y = 0; y < mask.height(); ++y) {
    auto* row = gray.ptr<std::uint8_t>(static_cast<int>(y));
    for (std::size_t x = 0; x < mask.width(); ++x) {
      row[x] = mask.at(x, y) ? 0 : 255;
    }
  }
  write_mat(path, gray);
}

BinaryMask read_mask(const fs::path& path) {
  ensure_exists(path);
  cv::Mat gray;
  try {
    gray = cv::imread(path.string(),
                      cv::IMREAD_GRAYSCALE | cv::IMREAD_IGNORE_ORIENTATION);
  } catch (const cv::Exception& e) {
    throw IoError("cannot decode '" + path.string() + "': " + e.what());
  }
  if (gray.empty()) throw IoError("cannot decode '" + path.string() + "'");
  BinaryMask mask(gray.cols, gray.rows);
  for (int y = 0; y < gray.rows; ++y) {
    const auto* row = gray.ptr<std::uint8_t>(y);
    for (int x = 0; x < gray.cols; ++x) mask.set(x, y, row[x] < 128);
  }
  return mask;
}

}  // namespace toonskin

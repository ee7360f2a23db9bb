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

#ifndef TOONSKIN_IMAGE_IO_HPP_
#define TOONSKIN_IMAGE_IO_HPP_

#include <filesystem>

#include "toonskin/types.hpp"

namespace toonskin {

// Decodes a JPEG or PNG into 3 channels; alpha is dropped. Throws IoError
// naming the path on failure.
RasterImage read_image(const std::filesystem::path& path);

// Writes losslessly when the extension is .png.
void write_image(const std::filesystem::path& path, const RasterImage& image);

// Writes an 8-bit grayscale PNG: 0 (black) for skin, 255 (white) otherwise.
void write_mask(const std::filesystem::path& path, const BinaryMask& mask);

// Inverse of write_mask; values below 128 read back as skin.
BinaryMask read_mask(const std::filesystem::path& path);

bool is_supported_image(const std::filesystem::path& path);

}  // namespace toonskin

#endif  // TOONSKIN_IMAGE_IO_HPP_

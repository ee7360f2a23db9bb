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

#include "toonskin/classifiers.hpp"

#include <string>

#include "toonskin/errors.hpp"

namespace toonskin {

namespace {

struct Entry {
  ClassifierId id;
  std::string_view name;
  PixelRule rule;
};

bool takayama_rule(Rgb8 p) { return classify_takayama_pixel(p); }

constexpr std::array<Entry, 8> kRegistry = {{
    {ClassifierId::kKovac, "kovac", &classify_kovac},
    {ClassifierId::kSwift, "swift", &classify_swift},
    {ClassifierId::kSaleh, "saleh", &classify_saleh},
    {ClassifierId::kOsman, "osman", &classify_osman},
    {ClassifierId::kTakayama, "takayama", &takayama_rule},
    {ClassifierId::kMethod1, "method1", &classify_method1},
    {ClassifierId::kMethod2, "method2", &classify_method2},
    {ClassifierId::kMethod3, "method3", &classify_method3},
}};

const Entry& entry(ClassifierId id) {
  return kRegistry[static_cast<std::size_t>(id)];
}

}  // namespace

std::string_view to_string(ClassifierId id) { return entry(id).name; }

std::optional<ClassifierId> try_parse_classifier(std::string_view name) {
  for (const Entry& e : kRegistry) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

ClassifierId parse_classifier(std::string_view name) {
  if (auto id = try_parse_classifier(name)) return *id;
  throw ParseError("unknown classifier '" + std::string(name) + "'");
}

PixelRule pixel_rule(ClassifierId id) { return entry(id).rule; }

BinaryMask classify_image(const RasterImage& image, ClassifierId id) {
  const PixelRule rule = pixel_rule(id);
  BinaryMask mask(image.width(), image.height());
  const auto pixels = image.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    mask.set_index(i, rule(pixels[i]));
  }
  return mask;
}

}  // namespace toonskin

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

#ifndef TOONSKIN_REPORT_HPP_
#define TOONSKIN_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "toonskin/classifiers.hpp"
#include "toonskin/evaluation.hpp"

namespace toonskin {

// Header: id,tp_count,tp_rate,fp_count,fp_rate,fp_rate_nonskin_nonpaper
// The first five columns are the stable contract; the last one is the
// conventional fp / (fp + tn), which is not a published metric.
std::string report_to_csv(const DatasetReport& report);

// Same rows plus corpus totals and the per-image breakdown.
std::string report_to_json(const DatasetReport& report);

// Fixed-width table with two decimals on the percentages, followed by the
// published TP%/FP% for each method where one exists.
std::string format_summary(const DatasetReport& report);

// Rate as text with 4 significant digits ("nan" when undefined).
std::string format_rate(double rate);

struct PublishedRates {
  std::string_view tp_percent;
  std::string_view fp_percent;
};

// Corpus-level TP%/FP% published for each method, as printed there.
// Swift has none.
std::optional<PublishedRates> published_rates(ClassifierId id);

}  // namespace toonskin

#endif  // TOONSKIN_REPORT_HPP_

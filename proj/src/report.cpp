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

#include "toonskin/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace toonskin {

namespace {

std::string_view mode_name(TakayamaMode mode) {
  return mode == TakayamaMode::kSegment ? "segment" : "pixel";
}

nlohmann::json counts_json(const EvalCounts& c) {
  return {{"tp_count", c.tp},        {"fp_count", c.fp},
          {"fn_count", c.fn},        {"tn_count", c.tn},
          {"gt_skin", c.gt_skin},    {"total", c.total}};
}

std::string percent(double rate) {
  if (std::isnan(rate)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", rate * 100.0);
  return buf;
}

}  // namespace

std::string format_rate(double rate) {
  if (std::isnan(rate)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%#.4g", rate);
  return buf;
}

std::optional<PublishedRates> published_rates(ClassifierId id) {
  switch (id) {
    case ClassifierId::kMethod1: return PublishedRates{"79.54%", "9.5%"};
    case ClassifierId::kKovac: return PublishedRates{"86.1%", "14.7%"};
    case ClassifierId::kOsman: return PublishedRates{"98.23%", "43.30%"};
    case ClassifierId::kTakayama: return PublishedRates{"75.88%", "7.7%"};
    case ClassifierId::kSaleh: return PublishedRates{"78.40%", "14.01%"};
    case ClassifierId::kMethod2: return PublishedRates{"83.91%", "10.98%"};
    case ClassifierId::kMethod3: return PublishedRates{"88.3%", "14.2%"};
    case ClassifierId::kSwift: return std::nullopt;
  }
  return std::nullopt;
}

std::string report_to_csv(const DatasetReport& report) {
  std::ostringstream out;
  out << "id,tp_count,tp_rate,fp_count,fp_rate,fp_rate_nonskin_nonpaper\n";
  for (const ClassifierRow& row : report.rows) {
    const RateSummary& s = row.summary;
    out << to_string(row.id) << ',' << s.sum.tp << ','
        << format_rate(s.tp_rate) << ',' << s.sum.fp << ','
        << format_rate(s.fp_rate) << ',' << format_rate(s.fp_rate_nonskin)
        << '\n';
  }
  return out.str();
}

std::string report_to_json(const DatasetReport& report) {
  nlohmann::json root;
  root["corpus"] = {{"images", report.images.size()},
                    {"gt_skin_total", report.gt_skin_total},
                    {"pixel_total", report.pixel_total},
                    {"takayama_mode", mode_name(report.takayama_mode)}};

  nlohmann::json rows = nlohmann::json::array();
  for (const ClassifierRow& row : report.rows) {
    const RateSummary& s = row.summary;
    nlohmann::json r = counts_json(s.sum);
    r["id"] = to_string(row.id);
    r["tp_rate"] = s.tp_rate_defined ? nlohmann::json(s.tp_rate)
                                     : nlohmann::json(nullptr);
    r["tp_rate_defined"] = s.tp_rate_defined;
    r["fp_rate"] = s.fp_rate;
    r["fp_rate_nonskin_nonpaper"] = s.fp_rate_nonskin;
    rows.push_back(std::move(r));
  }
  root["classifiers"] = std::move(rows);

  nlohmann::json images = nlohmann::json::array();
  for (const ImageBreakdown& img : report.images) {
    nlohmann::json per = nlohmann::json::object();
    for (std::size_t k = 0; k < img.counts.size() && k < report.rows.size();
         ++k) {
      per[std::string(to_string(report.rows[k].id))] =
          counts_json(img.counts[k]);
    }
    images.push_back({{"file", img.name}, {"classifiers", std::move(per)}});
  }
  root["images"] = std::move(images);
  return root.dump(2) + "\n";
}

std::string format_summary(const DatasetReport& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %14s %9s %14s %9s   %s\n", "Methods",
                "TP count", "TP%", "FP count", "FP%", "published TP% / FP%");
  out << line;
  for (const ClassifierRow& row : report.rows) {
    const RateSummary& s = row.summary;
    const auto published = published_rates(row.id);
    const std::string ref =
        published ? std::string(published->tp_percent) + " / " +
                        std::string(published->fp_percent)
                  : std::string("no paper reference value");
    std::snprintf(line, sizeof line, "%-10s %14llu %9s %14llu %9s   %s\n",
                  std::string(to_string(row.id)).c_str(),
                  static_cast<unsigned long long>(s.sum.tp),
                  percent(s.tp_rate).c_str(),
                  static_cast<unsigned long long>(s.sum.fp),
                  percent(s.fp_rate).c_str(), ref.c_str());
    out << line;
  }
  std::snprintf(line, sizeof line,
                "%zu images, %llu pixels, %llu ground-truth skin pixels\n",
                report.images.size(),
                static_cast<unsigned long long>(report.pixel_total),
                static_cast<unsigned long long>(report.gt_skin_total));
  out << line;
  return out.str();
}

}  // namespace toonskin

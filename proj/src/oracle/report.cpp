// Copyright 2026 The pathex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathex/oracle/report.h"

#include <algorithm>
#include <cmath>

namespace pathex::oracle {

namespace {

nlohmann::json Number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

bool WithinTolerance(double a, double b, const Tolerance& tolerance) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  if (a == b) return true;
  const double diff = std::abs(a - b);
  return diff <= tolerance.absolute ||
         diff <= tolerance.relative * std::max(std::abs(a), std::abs(b));
}

OracleReport CompareTables(const FeatureTable& expected, const FeatureTable& actual,
                           const FeatureManifest& manifest, const Tolerance& tolerance) {
  OracleReport report;
  for (const ManifestEntry& e : manifest.entries()) report.features.push_back({e.name});
  if (expected.rows.size() != actual.rows.size()) {
    report.structural_errors.push_back(
        "row count " + std::to_string(expected.rows.size()) + " vs " +
        std::to_string(actual.rows.size()));
  }
  const std::size_t rows = std::min(expected.rows.size(), actual.rows.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const FeatureRow& a = expected.rows[r];
    const FeatureRow& b = actual.rows[r];
    if (a.object_id != b.object_id) {
      report.structural_errors.push_back("row " + std::to_string(r) + ": object " +
                                         std::to_string(a.object_id) + " vs " +
                                         std::to_string(b.object_id));
      continue;
    }
    if (a.class_label != b.class_label) {
      report.structural_errors.push_back("object " + std::to_string(a.object_id) +
                                         ": class '" + a.class_label + "' vs '" +
                                         b.class_label + "'");
    }
    if (a.values.size() != manifest.size() || b.values.size() != manifest.size()) {
      report.structural_errors.push_back("object " + std::to_string(a.object_id) +
                                         ": wrong value count");
      continue;
    }
    ++report.rows_compared;
    for (std::size_t f = 0; f < manifest.size(); ++f) {
      const double x = a.values[f], y = b.values[f];
      FeatureError& err = report.features[f];
      const bool both_nan = std::isnan(x) && std::isnan(y);
      const double abs_err = both_nan ? 0.0 : std::abs(x - y);
      const double scale = std::max(std::abs(x), std::abs(y));
      const double rel_err = abs_err == 0 ? 0.0 : abs_err / scale;
      err.max_abs_error = std::max(err.max_abs_error, std::isnan(abs_err) ? INFINITY : abs_err);
      err.max_rel_error = std::max(err.max_rel_error, std::isnan(rel_err) ? INFINITY : rel_err);
      if (!WithinTolerance(x, y, tolerance)) {
        if (err.mismatches == 0) err.offending_object = a.object_id;
        ++err.mismatches;
        ++report.mismatched_values;
      }
    }
  }
  return report;
}

nlohmann::json ReportJson(const OracleReport& report) {
  nlohmann::json features = nlohmann::json::array();
  for (const FeatureError& e : report.features) {
    nlohmann::json item = {{"feature", e.name},
                           {"max_abs_error", Number(e.max_abs_error)},
                           {"max_rel_error", Number(e.max_rel_error)},
                           {"mismatches", e.mismatches}};
    item["offending_object"] =
        e.offending_object >= 0 ? nlohmann::json(e.offending_object) : nlohmann::json(nullptr);
    features.push_back(std::move(item));
  }
  return {{"ok", report.ok()},
          {"rows_compared", report.rows_compared},
          {"mismatched_values", report.mismatched_values},
          {"structural_errors", report.structural_errors},
          {"features", std::move(features)}};
}

}  // namespace pathex::oracle

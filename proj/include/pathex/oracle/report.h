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

#ifndef PATHEX_ORACLE_REPORT_H_
#define PATHEX_ORACLE_REPORT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "pathex/feature_table.h"
#include "pathex/manifest.h"

namespace pathex::oracle {

/// Values agree when |a-b| <= absolute or |a-b| <= relative*max(|a|,|b|).
/// Two NaNs agree.
struct Tolerance {
  double relative = 1e-6;
  double absolute = 1e-9;
};

bool WithinTolerance(double a, double b, const Tolerance& tolerance);

struct FeatureError {
  std::string name;
  double max_abs_error = 0;
  double max_rel_error = 0;
  ObjectId offending_object = -1;  // -1 when no disagreement
  std::size_t mismatches = 0;
};

struct OracleReport {
  std::vector<FeatureError> features;  // one per manifest entry
  std::size_t rows_compared = 0;
  std::size_t mismatched_values = 0;
  std::vector<std::string> structural_errors;  // row count / id / label

  bool ok() const { return mismatched_values == 0 && structural_errors.empty(); }
};

OracleReport CompareTables(const FeatureTable& expected, const FeatureTable& actual,
                           const FeatureManifest& manifest,
                           const Tolerance& tolerance = {});

nlohmann::json ReportJson(const OracleReport& report);

}  // namespace pathex::oracle

#endif  // PATHEX_ORACLE_REPORT_H_

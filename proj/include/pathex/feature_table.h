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

#ifndef PATHEX_FEATURE_TABLE_H_
#define PATHEX_FEATURE_TABLE_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pathex/manifest.h"
#include "pathex/region_model.h"

namespace pathex {

struct FeatureRow {
  ObjectId object_id = 0;
  std::string class_label;
  double center_x = 0.0;
  double center_y = 0.0;
  std::vector<double> values;  // kFeatureCount entries, manifest order
};

/// Conditions worth reporting that still yield a full feature row.
enum DiagnosticFlag : std::uint32_t {
  kDegenerateTexture = 1u << 0,  // some (scale, angle) had no valid pair
  kZeroIntensity = 1u << 1,      // total in-mask intensity is zero
};

struct ObjectDiagnostic {
  ObjectId object_id = 0;
  std::uint32_t flags = 0;
  int degenerate_texture_blocks = 0;

  friend bool operator==(const ObjectDiagnostic&, const ObjectDiagnostic&) = default;
};

std::string DiagnosticJsonLine(const ObjectDiagnostic& diagnostic);

/// Rows sorted by object id; diagnostics only for flagged objects.
struct FeatureTable {
  std::vector<FeatureRow> rows;
  std::vector<ObjectDiagnostic> diagnostics;
};

/// Shortest round-trip decimal form; "null" for NaN and infinities.
std::string FormatNumber(double value);

/// object_id, class_label, center_x, center_y, then manifest columns.
std::vector<std::string> CsvHeader(const FeatureManifest& manifest);
void WriteFeatureCsv(std::ostream& out, const FeatureTable& table,
                     const FeatureManifest& manifest);

/// Minimal RFC 4180 reader (quoted fields, embedded commas and quotes).
struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvDocument ReadCsv(std::istream& in);
CsvDocument ReadCsvFile(const std::filesystem::path& path);

/// Parses a numeric CSV cell; "null" and empty cells give NaN.
/// Throws kParse on anything else.
double ParseNumber(std::string_view cell);

/// Rebuilds a FeatureTable from a CSV whose header matches the manifest.
/// Throws kParse otherwise.
FeatureTable ParseFeatureCsv(const CsvDocument& doc, const FeatureManifest& manifest);

}  // namespace pathex

#endif  // PATHEX_FEATURE_TABLE_H_

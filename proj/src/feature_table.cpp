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

#include "pathex/feature_table.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "pathex/error.h"

namespace pathex {
namespace {

void WriteCell(std::ostream& out, std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << text;
    return;
  }
  out << '"';
  for (char c : text) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

std::string DiagnosticJsonLine(const ObjectDiagnostic& d) {
  nlohmann::json flags = nlohmann::json::array();
  if (d.flags & kDegenerateTexture) flags.push_back("DegenerateTexture");
  if (d.flags & kZeroIntensity) flags.push_back("ZeroIntensity");
  nlohmann::json line = {{"diagnostic", flags}, {"object_id", d.object_id}};
  if (d.flags & kDegenerateTexture) {
    line["degenerate_texture_blocks"] = d.degenerate_texture_blocks;
  }
  return line.dump();
}

std::string FormatNumber(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::string> CsvHeader(const FeatureManifest& manifest) {
  std::vector<std::string> header{"object_id", "class_label", "center_x",
                                  "center_y"};
  for (const ManifestEntry& e : manifest.entries()) header.push_back(e.name);
  return header;
}

void WriteFeatureCsv(std::ostream& out, const FeatureTable& table,
                     const FeatureManifest& manifest) {
  const std::vector<std::string> header = CsvHeader(manifest);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    WriteCell(out, header[i]);
  }
  out << '\n';
  for (const FeatureRow& row : table.rows) {
    out << row.object_id << ',';
    WriteCell(out, row.class_label);
    out << ',' << FormatNumber(row.center_x) << ',' << FormatNumber(row.center_y);
    for (double v : row.values) out << ',' << FormatNumber(v);
    out << '\n';
  }
}

CsvDocument ReadCsv(std::istream& in) {
  CsvDocument doc;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    if (doc.header.empty()) {
      doc.header = std::move(record);
    } else {
      doc.rows.push_back(std::move(record));
    }
    record.clear();
    any = false;
  };
  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get(c);
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      end_record();
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (any || !field.empty()) end_record();
  return doc;
}

CsvDocument ReadCsvFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return ReadCsv(in);
}

double ParseNumber(std::string_view cell) {
  if (cell.empty() || cell == "null") {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw Error(ErrorKind::kParse, "not a number: '" + std::string(cell) + "'");
  }
  return value;
}

FeatureTable ParseFeatureCsv(const CsvDocument& doc, const FeatureManifest& manifest) {
  if (doc.header != CsvHeader(manifest)) {
    throw Error(ErrorKind::kParse, "CSV header does not match manifest " +
                                       std::string(manifest.version()));
  }
  FeatureTable table;
  for (const auto& cells : doc.rows) {
    if (cells.size() != doc.header.size()) {
      throw Error(ErrorKind::kParse, "CSV row with " + std::to_string(cells.size()) +
                                         " cells");
    }
    FeatureRow row;
    const std::string& id = cells[0];
    auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), row.object_id);
    if (ec != std::errc() || ptr != id.data() + id.size()) {
      throw Error(ErrorKind::kParse, "bad object_id '" + id + "'");
    }
    row.class_label = cells[1];
    row.center_x = ParseNumber(cells[2]);
    row.center_y = ParseNumber(cells[3]);
    for (std::size_t i = 4; i < cells.size(); ++i) row.values.push_back(ParseNumber(cells[i]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace pathex

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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "pathex/error.h"
#include "pathex/feature_table.h"
#include "pathex/geojson.h"
#include "pathex/manifest.h"
#include "pathex/rasterize.h"
#include "pathex/spatial_index.h"
#include "pathex/write_back.h"
#include "test_support.h"

namespace pathex {
namespace {

const FeatureManifest& M() { return FeatureManifest::Canonical(); }

TEST(Manifest, CountsAndVersion) {
  EXPECT_EQ(M().size(), 247u);
  EXPECT_EQ(M().version(), "pathex-247/v1");
  EXPECT_EQ(M().FamilyCount(FeatureFamily::kSizeShape), 30u);
  EXPECT_EQ(M().FamilyCount(FeatureFamily::kTexture), 104u);
  EXPECT_EQ(M().FamilyCount(FeatureFamily::kIntensity), 17u);
  EXPECT_EQ(M().FamilyCount(FeatureFamily::kDistribution), 96u);
}

TEST(Manifest, NamesUniqueAndPrefixed) {
  std::set<std::string> names;
  for (const ManifestEntry& e : M().entries()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_TRUE(e.name.starts_with(std::string(FamilyName(e.family)) + "_")) << e.name;
    EXPECT_FALSE(e.description.empty());
  }
}

TEST(Manifest, KnownPositions) {
  EXPECT_EQ(M().IndexOf("SizeShape_Area"), 0u);
  EXPECT_EQ(M().IndexOf("Texture_AngularSecondMoment_s1_a0"), kTextureOffset);
  EXPECT_EQ(M().IndexOf("Texture_Contrast_s1_a0"), kTextureOffset + 1);
  EXPECT_EQ(M().IndexOf("Texture_AngularSecondMoment_s3_a0"), kTextureOffset + 4 * 13);
  EXPECT_EQ(M().IndexOf("Intensity_IntegratedIntensity"), kIntensityOffset);
  EXPECT_EQ(M().IndexOf("Distribution_FracAtD_b0"), kDistributionOffset);
  EXPECT_EQ(M().IndexOf("Distribution_RadialCV_b11"), kDistributionOffset + 35);
  EXPECT_EQ(M().IndexOf("Distribution_ZernikeMag_n0_m0"), kDistributionOffset + 36);
  EXPECT_EQ(M().IndexOf("Distribution_ZernikePhase_n9_m9"), kFeatureCount - 1);
  EXPECT_FALSE(M().IndexOf("SizeShape_Nope").has_value());
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(100), "100");
  EXPECT_EQ(FormatNumber(-2.5), "-2.5");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::quiet_NaN()), "null");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::infinity()), "null");
  const double tricky = 0.1 + 0.2;
  EXPECT_EQ(ParseNumber(FormatNumber(tricky)), tricky);
  EXPECT_TRUE(std::isnan(ParseNumber("null")));
}

FeatureTable SampleTable() {
  FeatureTable t;
  for (int r = 0; r < 3; ++r) {
    FeatureRow row;
    row.object_id = 10 + r;
    row.class_label = r == 1 ? "gland, \"big\"" : "nucleus";
    row.center_x = r + 0.25;
    row.center_y = 1.0 / (r + 3);
    for (std::size_t i = 0; i < kFeatureCount; ++i) row.values.push_back(std::sin(double(i * (r + 1))) * 1e3);
    row.values[5] = std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back(row);
  }
  return t;
}

TEST(FeatureCsv, HeaderHas251Columns) {
  const auto header = CsvHeader(M());
  EXPECT_EQ(header.size(), 251u);
  EXPECT_EQ(header[0], "object_id");
  EXPECT_EQ(header[4], "SizeShape_Area");
}

TEST(FeatureCsv, RoundTrip) {
  const FeatureTable t = SampleTable();
  std::stringstream ss;
  WriteFeatureCsv(ss, t, M());
  const CsvDocument doc = ReadCsv(ss);
  EXPECT_EQ(doc.header, CsvHeader(M()));
  ASSERT_EQ(doc.rows.size(), 3u);
  for (const auto& r : doc.rows) EXPECT_EQ(r.size(), 251u);
  const FeatureTable back = ParseFeatureCsv(doc, M());
  ASSERT_EQ(back.rows.size(), 3u);
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_EQ(back.rows[r].object_id, t.rows[r].object_id);
    EXPECT_EQ(back.rows[r].class_label, t.rows[r].class_label);
    EXPECT_EQ(back.rows[r].center_y, t.rows[r].center_y);
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (std::isnan(t.rows[r].values[i])) {
        EXPECT_TRUE(std::isnan(back.rows[r].values[i]));
      } else {
        EXPECT_EQ(back.rows[r].values[i], t.rows[r].values[i]);
      }
    }
  }
}

TEST(FeatureCsv, EmptyTableKeepsHeader) {
  std::stringstream ss;
  WriteFeatureCsv(ss, FeatureTable{}, M());
  const CsvDocument doc = ReadCsv(ss);
  EXPECT_EQ(doc.header.size(), 251u);
  EXPECT_TRUE(doc.rows.empty());
}

TEST(FeatureCsv, WrongHeaderRejected) {
  std::stringstream ss("object_id,class_label\n1,x\n");
  EXPECT_THROW(ParseFeatureCsv(ReadCsv(ss), M()), Error);
}

TEST(Diagnostics, JsonLine) {
  const std::string line = DiagnosticJsonLine({7, kDegenerateTexture | kZeroIntensity, 3});
  EXPECT_NE(line.find("\"object_id\":7"), std::string::npos);
  EXPECT_NE(line.find("DegenerateTexture"), std::string::npos);
  EXPECT_NE(line.find("ZeroIntensity"), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
}

const char* kThree = R"({"type":"FeatureCollection","features":[
 {"type":"Feature","id":"1","properties":{"name":"a"},"geometry":{"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4],[0,0]]]}},
 {"type":"Feature","id":"2","properties":{},"geometry":{"type":"Polygon","coordinates":[[[10.5,10.25],[14,10],[14,14],[10,14],[10.5,10.25]]]}},
 {"type":"Feature","id":"3","properties":{},"geometry":{"type":"Polygon","coordinates":[[[20,20],[26,20],[26,25],[20,25],[20,20]]]}}]})";

FeatureTable RowsFor(const RegionSet& regions) {
  FeatureTable t;
  for (const ObjectRecord& o : regions.objects()) {
    FeatureRow row;
    row.object_id = o.object_id;
    row.values.assign(kFeatureCount, static_cast<double>(o.object_id));
    t.rows.push_back(row);
  }
  return t;
}

TEST(WriteBack, ThreeAnnotations) {
  const AnnotationSet set = ParseGeoJson(kThree);
  const IngestedAnnotations in = RegionsFromAnnotations(set, 64, 64);
  const nlohmann::json out = WriteBack(SpatialIndex::Build(in.regions), RowsFor(in.regions), set, M());
  ASSERT_EQ(out["features"].size(), 3u);
  for (int i = 0; i < 3; ++i) {
    const auto& p = out["features"][i]["properties"]["pathomics"];
    ASSERT_TRUE(p.is_object());
    EXPECT_EQ(p.size(), 247u);
    EXPECT_EQ(p["SizeShape_Area"].get<double>(), i + 1);
  }
  EXPECT_EQ(out["features"][0]["properties"]["name"], "a");
}

TEST(WriteBack, UnknownRowIsJoinError) {
  const AnnotationSet set = ParseGeoJson(kThree);
  const IngestedAnnotations in = RegionsFromAnnotations(set, 64, 64);
  FeatureTable t = RowsFor(in.regions);
  t.rows[0].object_id = 99;
  try {
    WriteBack(SpatialIndex::Build(in.regions), t, set, M());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kJoin);
  }
}

TEST(WriteBack, SkippedAnnotationGetsNullAndGeometryUntouched) {
  std::string text = kThree;
  const std::string from = "[[[20,20],[26,20],[26,25],[20,25],[20,20]]]";
  text.replace(text.find(from), from.size(), "[[[20,20],[22,22],[24,24],[20,20]]]");
  const AnnotationSet set = ParseGeoJson(text);
  const IngestedAnnotations in = RegionsFromAnnotations(set, 64, 64);
  EXPECT_EQ(in.regions.size(), 2u);
  EXPECT_EQ(in.warnings.size(), 1u);
  const nlohmann::json out = WriteBack(SpatialIndex::Build(in.regions), RowsFor(in.regions), set, M());
  EXPECT_TRUE(out["features"][2]["properties"]["pathomics"].is_null());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(out["features"][i]["geometry"].dump(), set.document["features"][i]["geometry"].dump());
  }
}

}  // namespace
}  // namespace pathex

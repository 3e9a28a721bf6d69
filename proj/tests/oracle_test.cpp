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
#include <random>

#include "pathex/error.h"
#include "pathex/geojson.h"
#include "pathex/label_mask.h"
#include "pathex/manifest.h"
#include "pathex/object_kernel.h"
#include "pathex/oracle/oracle_extract.h"
#include "pathex/oracle/oracle_features.h"
#include "pathex/oracle/report.h"
#include "pathex/oracle/synthetic.h"
#include "pathex/rasterize.h"
#include "pathex/spatial_index.h"
#include "test_support.h"

namespace pathex {
namespace {

using testing::FilledMask;
using testing::MaskFromRows;

std::size_t F(std::string_view name) { return *FeatureManifest::Canonical().IndexOf(name); }

TEST(OracleFeatures, ConstantSquare) {
  const oracle::OracleResult r =
      oracle::OracleFeatures(testing::ConstantPatch(10, 10, 0.5), FilledMask(10, 10), {0, 0, 10, 10});
  ASSERT_EQ(r.values.size(), kFeatureCount);
  EXPECT_EQ(r.values[F("SizeShape_Area")], 100);
  EXPECT_EQ(r.values[F("Intensity_StdIntensity")], 0);
  EXPECT_EQ(r.values[F("Texture_Contrast_s1_a0")], 0);
}

TEST(OracleFeatures, EmptyMaskRejected) {
  const ObjectMask empty(2, 2, std::vector<std::uint8_t>(4, 0));
  EXPECT_THROW(oracle::OracleFeatures(testing::ConstantPatch(2, 2, 0.5), empty, {0, 0, 2, 2}), Error);
}

struct Case {
  ObjectMask mask;
  IntensityPatch patch;
};

// Randomized objects covering every degenerate class.
Case MakeCase(std::mt19937_64& rng, int i) {
  std::uniform_int_distribution<std::int64_t> edge(2, 40);
  ObjectMask mask;
  switch (i % 6) {
    case 0: mask = FilledMask(1, 1); break;
    case 1: mask = i % 12 == 1 ? FilledMask(1, edge(rng)) : FilledMask(edge(rng), 1); break;
    case 2: {
      const std::int64_t w = edge(rng) + 6, h = edge(rng) + 6;
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(w * h), 1);
      for (std::int64_t y = h / 3; y < 2 * h / 3; ++y) {
        for (std::int64_t x = w / 3; x < 2 * w / 3; ++x) bits[y * w + x] = 0;
      }
      mask = ObjectMask(w, h, std::move(bits));
      break;
    }
    case 3: mask = FilledMask(edge(rng), edge(rng)); break;
    default: mask = testing::RandomBlob(rng, edge(rng), edge(rng), 0.3 + 0.1 * (i % 5)); break;
  }
  IntensityPatch patch;
  const std::int64_t w = mask.width(), h = mask.height();
  switch ((i / 6) % 4) {
    case 0: patch = testing::ConstantPatch(w, h, i % 8 == 0 ? 0.0 : 0.4); break;
    case 1: patch = testing::PatchFrom(w, h, [&](auto x, auto y) { return (x + 2 * y) / double(w + 2 * h); }); break;
    case 2: {
      const double cx = w / 2.0, cy = h / 2.0, s = std::max<double>(w, h) / 3.0 + 0.5;
      patch = testing::PatchFrom(w, h, [&](auto x, auto y) {
        return std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (2 * s * s));
      });
      break;
    }
    default: patch = testing::RandomPatch(rng, w, h); break;
  }
  return {mask, patch};
}

TEST(OracleFeatures, EngineAgreesOverRandomizedObjects) {
  std::mt19937_64 rng(2024);
  const oracle::Tolerance tol;
  int compared = 0;
  for (int i = 0; i < 420; ++i) {
    const Case c = MakeCase(rng, i);
    const ObjectRecord object = testing::MakeObject(i + 1, c.mask, 100 + i, 50);
    const ObjectFeatures engine = ComputeObjectFeatures(MakeView(object, c.patch), object.object_id);
    const oracle::OracleResult ref = oracle::OracleFeatures(c.patch, c.mask, object.bbox);
    ASSERT_EQ(engine.row.values.size(), kFeatureCount);
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      ASSERT_TRUE(oracle::WithinTolerance(ref.values[k], engine.row.values[k], tol))
          << "case " << i << " feature " << FeatureManifest::Canonical().entries()[k].name
          << " oracle " << ref.values[k] << " engine " << engine.row.values[k];
    }
    EXPECT_EQ(ref.degenerate_texture_blocks, engine.diagnostic.degenerate_texture_blocks) << i;
    EXPECT_EQ(ref.zero_intensity, (engine.diagnostic.flags & kZeroIntensity) != 0) << i;
    ++compared;
  }
  EXPECT_GE(compared, 300);
}

TEST(OracleQuery, MatchesIndex) {
  oracle::SyntheticSpec spec;
  spec.seed = 3;
  spec.object_count = 150;
  spec.slide_width = spec.slide_height = 1024;
  const oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(spec);
  const SpatialIndex index = SpatialIndex::Build(s.regions);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> pos(-20, 1030), size(1, 400);
  for (int q = 0; q < 300; ++q) {
    const std::int64_t x = pos(rng), y = pos(rng);
    const BoundingBox w{x, y, x + size(rng), y + size(rng)};
    ASSERT_EQ(oracle::OracleQuery(s.regions, w), index.QueryWindow(w));
  }
  EXPECT_EQ(oracle::OracleQuery(s.regions, {0, 0, 1024, 1024}).size(), 150u);
  EXPECT_TRUE(oracle::OracleQuery(RegionSet(10, 10, {}), {0, 0, 10, 10}).empty());
}

TEST(Tolerance, Rules) {
  const oracle::Tolerance tol;
  EXPECT_TRUE(oracle::WithinTolerance(1.0, 1.0 + 5e-7, tol));
  EXPECT_FALSE(oracle::WithinTolerance(1.0, 1.0 + 5e-6, tol));
  EXPECT_TRUE(oracle::WithinTolerance(0.0, 5e-10, tol));
  EXPECT_FALSE(oracle::WithinTolerance(0.0, 5e-9, tol));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(oracle::WithinTolerance(nan, nan, tol));
  EXPECT_FALSE(oracle::WithinTolerance(nan, 0.0, tol));
}

FeatureTable TinyTable(int rows) {
  FeatureTable t;
  for (int r = 0; r < rows; ++r) {
    FeatureRow row;
    row.object_id = r + 1;
    row.values.assign(kFeatureCount, 1.0);
    t.rows.push_back(row);
  }
  return t;
}

TEST(CompareTables, IdenticalTablesPass) {
  const oracle::OracleReport r = oracle::CompareTables(TinyTable(3), TinyTable(3), FeatureManifest::Canonical());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.features.size(), kFeatureCount);
  EXPECT_EQ(r.rows_compared, 3u);
  EXPECT_EQ(oracle::ReportJson(r)["features"].size(), kFeatureCount);
}

TEST(CompareTables, ReportsOffendingObject) {
  FeatureTable b = TinyTable(3);
  b.rows[1].values[7] = 2.0;
  const oracle::OracleReport r = oracle::CompareTables(TinyTable(3), b, FeatureManifest::Canonical());
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.mismatched_values, 1u);
  EXPECT_EQ(r.features[7].offending_object, 2);
  EXPECT_DOUBLE_EQ(r.features[7].max_abs_error, 1.0);
  for (const auto& f : r.features) {
    EXPECT_GE(f.max_abs_error, 0);
    EXPECT_GE(f.max_rel_error, 0);
  }
}

TEST(CompareTables, StructuralMismatch) {
  EXPECT_FALSE(oracle::CompareTables(TinyTable(3), TinyTable(2), FeatureManifest::Canonical()).ok());
  FeatureTable b = TinyTable(3);
  b.rows[2].object_id = 40;
  EXPECT_FALSE(oracle::CompareTables(TinyTable(3), b, FeatureManifest::Canonical()).ok());
}

TEST(Synthetic, HundredObjectsNoOverlap) {
  oracle::SyntheticSpec spec;
  spec.seed = 1;
  const oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(spec);
  ASSERT_EQ(s.regions.size(), 100u);
  const auto& objs = s.regions.objects();
  for (std::size_t a = 0; a < objs.size(); ++a) {
    EXPECT_LE(objs[a].bbox.width(), 32);
    EXPECT_LE(objs[a].bbox.height(), 32);
    for (std::size_t b = a + 1; b < objs.size(); ++b) {
      EXPECT_FALSE(BBoxIntersects(objs[a].bbox, objs[b].bbox)) << a << " " << b;
    }
  }
}

TEST(Synthetic, CoversShapeAndIntensityClasses) {
  oracle::SyntheticSpec spec;
  spec.seed = 5;
  spec.object_count = 48;
  const oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(spec);
  int single = 0, line = 0, holes = 0;
  for (const ObjectRecord& o : s.regions.objects()) {
    const std::int64_t area = MaskArea(o.mask);
    single += area == 1;
    line += area > 1 && (o.bbox.width() == 1 || o.bbox.height() == 1);
    holes += oracle::OracleEulerNumber(o.mask) < 1;
  }
  EXPECT_GT(single, 0);
  EXPECT_GT(line, 0);
  EXPECT_GT(holes, 0);
}

TEST(Synthetic, Deterministic) {
  oracle::SyntheticSpec spec;
  spec.seed = 11;
  spec.object_count = 60;
  spec.slide_width = spec.slide_height = 600;
  const oracle::SyntheticSlide a = oracle::GenerateSyntheticSlide(spec);
  const oracle::SyntheticSlide b = oracle::GenerateSyntheticSlide(spec);
  EXPECT_EQ(a.slide.samples, b.slide.samples);
  EXPECT_EQ(a.geojson.dump(), b.geojson.dump());
  EXPECT_TRUE(a.regions.SameRegions(b.regions));
  testing::TempDir d1, d2;
  oracle::WriteSyntheticSlide(a, d1.path());
  oracle::WriteSyntheticSlide(b, d2.path());
  for (const char* f : {oracle::kSlideFile, oracle::kGeoJsonFile, oracle::kLabelFile, oracle::kClassFile}) {
    EXPECT_EQ(testing::ReadFile(d1 / f), testing::ReadFile(d2 / f)) << f;
  }
  spec.seed = 12;
  EXPECT_NE(oracle::GenerateSyntheticSlide(spec).geojson.dump(), a.geojson.dump());
}

TEST(Synthetic, ZeroObjects) {
  oracle::SyntheticSpec spec;
  spec.object_count = 0;
  const oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(spec);
  EXPECT_TRUE(s.regions.empty());
  EXPECT_EQ(s.geojson["type"], "FeatureCollection");
  EXPECT_TRUE(s.geojson["features"].empty());
  EXPECT_TRUE(ParseGeoJson(s.geojson.dump()).features.empty());
}

TEST(Synthetic, InfeasiblePacking) {
  oracle::SyntheticSpec spec;
  spec.object_count = 500;
  spec.slide_width = spec.slide_height = 100;
  try {
    oracle::GenerateSyntheticSlide(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPacking);
  }
}

TEST(Synthetic, IngestionPathsAgree) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    oracle::SyntheticSpec spec;
    spec.seed = seed;
    spec.object_count = 120;
    spec.slide_width = spec.slide_height = 1024;
    const oracle::SyntheticSlide s = oracle::GenerateSyntheticSlide(spec);
    const IngestedAnnotations geo = RegionsFromAnnotations(ParseGeoJson(s.geojson.dump()), 1024, 1024);
    EXPECT_TRUE(geo.warnings.empty());
    const RegionSet labels = LoadLabelMask(s.labels, s.classes);
    EXPECT_TRUE(geo.regions.SameRegions(labels)) << "seed " << seed;
    EXPECT_TRUE(geo.regions.SameRegions(s.regions)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace pathex

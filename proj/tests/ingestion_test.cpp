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

#include <random>

#include "pathex/error.h"
#include "pathex/geojson.h"
#include "pathex/image_io.h"
#include "pathex/label_mask.h"
#include "pathex/rasterize.h"
#include "pathex/slide_source.h"
#include "test_support.h"

namespace pathex {
namespace {

using testing::TempDir;

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no pathex::Error thrown";
  return ErrorKind::kInvalidArgument;
}

std::string Feature(const std::string& id, const std::string& geometry) {
  return R"({"type":"Feature","id":")" + id + R"(","properties":{},"geometry":)" + geometry + "}";
}

std::string Collection(const std::vector<std::string>& features) {
  std::string s = R"({"type":"FeatureCollection","features":[)";
  for (std::size_t i = 0; i < features.size(); ++i) s += (i ? "," : "") + features[i];
  return s + "]}";
}

const char* kSquare = R"({"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4],[0,0]]]})";
const char* kSquareWithHole =
    R"({"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4],[0,0]],[[1,1],[3,1],[3,3],[1,3],[1,1]]]})";

TEST(ParseGeoJson, SingleSquare) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("7", kSquare)}));
  ASSERT_EQ(set.features.size(), 1u);
  EXPECT_EQ(set.features[0].holes.size(), 0u);
  EXPECT_EQ(set.features[0].annotation_id, "7");
}

TEST(ParseGeoJson, SquareWithHole) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("1", kSquareWithHole)}));
  ASSERT_EQ(set.features.size(), 1u);
  EXPECT_EQ(set.features[0].holes.size(), 1u);
}

TEST(ParseGeoJson, MalformedJson) {
  EXPECT_EQ(KindOf([] { ParseGeoJson("{"); }), ErrorKind::kParse);
}

TEST(ParseGeoJson, PointIsUnsupportedAndNamesFeature) {
  try {
    ParseGeoJson(Collection({Feature("cell-42", R"({"type":"Point","coordinates":[1,2]})")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedGeometry);
    EXPECT_NE(std::string(e.what()).find("cell-42"), std::string::npos);
  }
}

TEST(ParseGeoJson, LineStringIsUnsupported) {
  EXPECT_EQ(KindOf([] {
              ParseGeoJson(Collection(
                  {Feature("1", R"({"type":"LineString","coordinates":[[0,0],[3,3]]})")}));
            }),
            ErrorKind::kUnsupportedGeometry);
}

TEST(ParseGeoJson, UnclosedRing) {
  EXPECT_EQ(KindOf([] {
              ParseGeoJson(Collection(
                  {Feature("1", R"({"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4]]]})")}));
            }),
            ErrorKind::kInvalidRing);
}

TEST(ParseGeoJson, MultiPolygonSplitsIntoParts) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature(
      "9",
      R"({"type":"MultiPolygon","coordinates":[[[[0,0],[2,0],[2,2],[0,2],[0,0]]],[[[5,5],[7,5],[7,7],[5,7],[5,5]]]]})")}));
  ASSERT_EQ(set.features.size(), 2u);
  EXPECT_EQ(set.features[0].part_index, 0);
  EXPECT_EQ(set.features[1].part_index, 1);
  EXPECT_NE(set.features[0].annotation_id, set.features[1].annotation_id);
}

TEST(AssignObjectIds, NumericIdsKept) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("12", kSquare), Feature("3", kSquare)}));
  EXPECT_EQ(AssignObjectIds(set), (std::vector<ObjectId>{12, 3}));
}

TEST(AssignObjectIds, NonNumericFallsBackToOrdinals) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("a", kSquare), Feature("3", kSquare)}));
  EXPECT_EQ(AssignObjectIds(set), (std::vector<ObjectId>{1, 2}));
}

TEST(Rasterize, SquareRing) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("1", kSquare)}));
  const ObjectRecord r = RasterizeAnnotation(set.features[0], 1, 100, 100);
  EXPECT_EQ(r.mask.width(), 4);
  EXPECT_EQ(r.mask.height(), 4);
  EXPECT_EQ(MaskArea(r.mask), 16);
  EXPECT_EQ(r.bbox, (BoundingBox{0, 0, 4, 4}));
}

TEST(Rasterize, RingWithCenteredHole) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature(
      "1",
      R"({"type":"Polygon","coordinates":[[[0,0],[10,0],[10,10],[0,10],[0,0]],[[3,3],[7,3],[7,7],[3,7],[3,3]]]})")}));
  EXPECT_EQ(MaskArea(RasterizeAnnotation(set.features[0], 1, 100, 100).mask), 84);
}

TEST(Rasterize, CollinearRingIsEmpty) {
  const AnnotationSet set = ParseGeoJson(Collection(
      {Feature("1", R"({"type":"Polygon","coordinates":[[[0,0],[2,2],[4,4],[0,0]]]})")}));
  EXPECT_EQ(KindOf([&] { RasterizeAnnotation(set.features[0], 1, 100, 100); }),
            ErrorKind::kEmptyObject);
}

TEST(Rasterize, EmptyAnnotationSkippedWithWarning) {
  const AnnotationSet set = ParseGeoJson(Collection(
      {Feature("1", kSquare), Feature("2", R"({"type":"Polygon","coordinates":[[[0,0],[2,2],[4,4],[0,0]]]})")}));
  const IngestedAnnotations in = RegionsFromAnnotations(set, 16, 16);
  EXPECT_EQ(in.regions.size(), 1u);
  ASSERT_EQ(in.warnings.size(), 1u);
  EXPECT_EQ(in.warnings[0].annotation_id, "2");
  EXPECT_NE(WarningJsonLine(in.warnings[0]).find("\"2\""), std::string::npos);
}

TEST(Rasterize, ClipsToSlide) {
  const AnnotationSet set = ParseGeoJson(Collection({Feature("1", kSquare)}));
  const ObjectRecord r = RasterizeAnnotation(set.features[0], 1, 3, 2);
  EXPECT_EQ(r.bbox, (BoundingBox{0, 0, 3, 2}));
  EXPECT_EQ(MaskArea(r.mask), 6);
}

LabelRaster Labels(std::int64_t w, std::int64_t h, std::vector<std::uint32_t> v) {
  return {w, h, std::move(v)};
}

TEST(LabelMask, TwoLabels) {
  // clang-format off
  const RegionSet set = LoadLabelMask(Labels(6, 4, {
      1, 1, 0, 2, 2, 2,
      1, 1, 0, 2, 2, 2,
      0, 0, 0, 2, 2, 2,
      0, 0, 0, 0, 0, 0}));
  // clang-format on
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(MaskArea(set.Find(1)->mask), 4);
  EXPECT_EQ(MaskArea(set.Find(2)->mask), 9);
  EXPECT_EQ(set.Find(2)->bbox, (BoundingBox{3, 0, 6, 3}));
}

TEST(LabelMask, AllZeros) {
  EXPECT_EQ(KindOf([] { LoadLabelMask(Labels(3, 3, std::vector<std::uint32_t>(9, 0))); }),
            ErrorKind::kEmptyRegionSet);
}

TEST(LabelMask, SplitLabelStaysOneObject) {
  const RegionSet set = LoadLabelMask(Labels(5, 1, {3, 0, 0, 0, 3}));
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(MaskArea(set.objects()[0].mask), 2);
  EXPECT_EQ(set.objects()[0].bbox, (BoundingBox{0, 0, 5, 1}));
}

TEST(LabelMask, ClassMapAssignsLabels) {
  const ClassMap classes = ParseClassMap(R"({"1":"nucleus","2":"tubule"})");
  const RegionSet set = LoadLabelMask(Labels(3, 1, {1, 0, 2}), classes);
  EXPECT_EQ(set.Find(1)->class_label, "nucleus");
  EXPECT_EQ(set.Find(2)->class_label, "tubule");
}

BinaryRaster Binary(std::int64_t w, std::int64_t h, std::vector<std::uint8_t> v) {
  return {w, h, std::move(v)};
}

TEST(ConnectedComponents, DiagonalTouch) {
  // clang-format off
  const BinaryRaster raster = Binary(4, 4, {
      1, 1, 0, 0,
      1, 1, 0, 0,
      0, 0, 1, 1,
      0, 0, 1, 1});
  // clang-format on
  EXPECT_EQ(ConnectedComponents(raster, 4).size(), 2u);
  EXPECT_EQ(ConnectedComponents(raster, 8).size(), 1u);
}

// Independent flood fill used as the reference component count.
std::size_t FloodFillCount(const BinaryRaster& r, int connectivity) {
  std::vector<int> seen(r.bits.size(), 0);
  std::size_t count = 0;
  for (std::int64_t start = 0; start < r.width * r.height; ++start) {
    if (!r.bits[start] || seen[start]) continue;
    ++count;
    std::vector<std::int64_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const std::int64_t p = stack.back();
      stack.pop_back();
      const std::int64_t x = p % r.width, y = p / r.width;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if ((dx == 0 && dy == 0) || (connectivity == 4 && dx != 0 && dy != 0)) continue;
          const std::int64_t nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= r.width || ny >= r.height) continue;
          const std::int64_t q = ny * r.width + nx;
          if (r.bits[q] && !seen[q]) {
            seen[q] = 1;
            stack.push_back(q);
          }
        }
      }
    }
  }
  return count;
}

TEST(ConnectedComponents, Checkerboard) {
  std::vector<std::uint8_t> bits;
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) bits.push_back((x + y) % 2 == 0);
  }
  const BinaryRaster raster = Binary(4, 4, bits);
  EXPECT_EQ(FloodFillCount(raster, 4), 8u);
  const RegionSet set = ConnectedComponents(raster, 4);
  EXPECT_EQ(set.size(), 8u);
  for (const ObjectRecord& o : set.objects()) EXPECT_EQ(MaskArea(o.mask), 1);
}

TEST(ConnectedComponents, RandomRastersMatchFloodFill) {
  testing::ForAllSeeds(40, 900, [](std::mt19937_64& rng, int) {
    std::bernoulli_distribution on(0.45);
    BinaryRaster r{17, 13, {}};
    for (int i = 0; i < 17 * 13; ++i) r.bits.push_back(on(rng));
    r.bits[0] = 1;
    for (int c : {4, 8}) {
      const RegionSet set = ConnectedComponents(r, c);
      EXPECT_EQ(set.size(), FloodFillCount(r, c));
      std::int64_t total = 0;
      for (const ObjectRecord& o : set.objects()) total += MaskArea(o.mask);
      std::int64_t expected = 0;
      for (auto b : r.bits) expected += b;
      EXPECT_EQ(total, expected);
    }
  });
}

TEST(ConnectedComponents, EmptyRaster) {
  EXPECT_EQ(KindOf([] { ConnectedComponents(Binary(2, 2, {0, 0, 0, 0}), 4); }),
            ErrorKind::kEmptyRegionSet);
}

TEST(SlideSource, EightBitConstant) {
  const RasterSlide slide(testing::GrayRaster(8, 8, 200));
  const IntensityPatch p = ReadPatch(slide, {1, 1, 5, 5});
  ASSERT_EQ(p.values.size(), 16u);
  for (double v : p.values) EXPECT_DOUBLE_EQ(v, 200.0 / 255.0);
}

TEST(SlideSource, OutOfBoundsWindow) {
  const RasterSlide slide(testing::GrayRaster(8, 8, 200));
  EXPECT_EQ(KindOf([&] { ReadPatch(slide, {-1, 0, 4, 4}); }), ErrorKind::kBounds);
  EXPECT_EQ(KindOf([&] { ReadPatch(slide, {4, 4, 9, 8}); }), ErrorKind::kBounds);
}

TEST(SlideSource, SixteenBitMaximumIsOne) {
  const RasterSlide slide(testing::GrayRaster(4, 4, 65535, 16));
  for (double v : ReadPatch(slide, {0, 0, 4, 4}).values) EXPECT_EQ(v, 1.0);
}

TEST(SlideSource, RgbUsesLuminance) {
  Raster rgb;
  rgb.width = 1;
  rgb.height = 1;
  rgb.channels = 3;
  rgb.samples = {255, 0, 0};
  const RasterSlide slide(rgb);
  const double v = ReadPatch(slide, {0, 0, 1, 1}).values[0];
  EXPECT_NEAR(v, 0.2126, 1e-12);
}

TEST(ImageIo, TiffRoundTrip) {
  TempDir dir;
  Raster r = testing::GrayRaster(300, 270, 0, 16);
  for (std::size_t i = 0; i < r.samples.size(); ++i) r.samples[i] = static_cast<std::uint32_t>(i * 37 % 65536);
  WriteTiff(dir / "a.tif", r);
  const Raster back = ReadRaster(dir / "a.tif");
  EXPECT_EQ(back.width, 300);
  EXPECT_EQ(back.height, 270);
  EXPECT_EQ(back.bits_per_sample, 16);
  EXPECT_EQ(back.samples, r.samples);
}

TEST(ImageIo, PngRoundTrip) {
  TempDir dir;
  Raster r = testing::GrayRaster(5, 3, 0, 8);
  for (std::size_t i = 0; i < r.samples.size(); ++i) r.samples[i] = static_cast<std::uint32_t>(i * 17);
  WritePng(dir / "a.png", r);
  const Raster back = ReadRaster(dir / "a.png");
  EXPECT_EQ(back.samples, r.samples);
}

TEST(ImageIo, MissingFileIsIoError) {
  EXPECT_EQ(KindOf([] { ReadRaster("/nonexistent/slide.tif"); }), ErrorKind::kIo);
}

}  // namespace
}  // namespace pathex

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

#include "pathex/error.h"
#include "pathex/region_model.h"
#include "test_support.h"

namespace pathex {
namespace {

using testing::FilledMask;
using testing::MakeObject;
using testing::MaskFromRows;

TEST(BBoxIntersects, HalfOpenEdgeTouchDoesNotIntersect) {
  EXPECT_FALSE(BBoxIntersects({0, 0, 4, 4}, {4, 0, 8, 4}));
  EXPECT_FALSE(BBoxIntersects({0, 0, 4, 4}, {0, 4, 4, 8}));
}

TEST(BBoxIntersects, OverlapAtOnePixel) { EXPECT_TRUE(BBoxIntersects({0, 0, 4, 4}, {3, 3, 6, 6})); }

TEST(BBoxIntersects, Identity) { EXPECT_TRUE(BBoxIntersects({0, 0, 4, 4}, {0, 0, 4, 4})); }

TEST(BBoxUnion, Examples) {
  EXPECT_EQ(BBoxUnion({0, 0, 2, 2}, {4, 4, 6, 6}), (BoundingBox{0, 0, 6, 6}));
  EXPECT_EQ(BBoxUnion({1, 1, 3, 3}, {1, 1, 3, 3}), (BoundingBox{1, 1, 3, 3}));
  EXPECT_EQ(BBoxUnion({0, 5, 2, 9}, {1, 0, 8, 6}), (BoundingBox{0, 0, 8, 9}));
}

TEST(MaskArea, FilledSquare) { EXPECT_EQ(MaskArea(FilledMask(10, 10)), 100); }

TEST(MaskArea, SinglePixel) { EXPECT_EQ(MaskArea(FilledMask(1, 1)), 1); }

TEST(MaskArea, SquareWithHole) {
  std::vector<std::string> rows(10, std::string(10, '#'));
  for (int y = 3; y < 7; ++y) rows[y].replace(3, 4, "....");
  EXPECT_EQ(MaskArea(MaskFromRows(rows)), 84);
}

TEST(ObjectMask, RejectsWrongBitCount) {
  EXPECT_THROW(ObjectMask(3, 3, std::vector<std::uint8_t>(8, 1)), Error);
}

TEST(RegionSet, SortsById) {
  RegionSet set(20, 20, {MakeObject(5, FilledMask(2, 2), 0, 0), MakeObject(2, FilledMask(2, 2), 5, 5)});
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set.objects()[0].object_id, 2);
  EXPECT_EQ(set.objects()[1].object_id, 5);
  ASSERT_NE(set.Find(5), nullptr);
  EXPECT_EQ(set.Find(5)->bbox, (BoundingBox{0, 0, 2, 2}));
  EXPECT_EQ(set.Find(3), nullptr);
}

TEST(RegionSet, RejectsDuplicateIds) {
  EXPECT_THROW(RegionSet(20, 20, {MakeObject(1, FilledMask(2, 2)), MakeObject(1, FilledMask(2, 2), 4, 4)}),
               Error);
}

TEST(RegionSet, RejectsBoxOutsideSlide) {
  EXPECT_THROW(RegionSet(4, 4, {MakeObject(1, FilledMask(2, 2), 3, 3)}), Error);
}

TEST(RegionSet, RejectsEmptyMask) {
  EXPECT_THROW(RegionSet(4, 4, {MakeObject(1, MaskFromRows({"..", ".."}))}), Error);
}

TEST(RegionSet, RejectsMaskBoxMismatch) {
  ObjectRecord r = MakeObject(1, FilledMask(2, 2));
  r.bbox.max_x = 3;
  EXPECT_THROW(RegionSet(4, 4, {r}), Error);
}

TEST(RegionSet, RejectsNonPositiveSlide) { EXPECT_THROW(RegionSet(0, 4, {}), Error); }

TEST(RegionSet, SameRegionsIgnoresSource) {
  RegionSet a(8, 8, {MakeObject(1, FilledMask(2, 2))}, "a.geojson");
  RegionSet b(8, 8, {MakeObject(1, FilledMask(2, 2))}, "b.tif");
  RegionSet c(8, 8, {MakeObject(1, FilledMask(2, 3))}, "a.geojson");
  EXPECT_TRUE(a.SameRegions(b));
  EXPECT_FALSE(a.SameRegions(c));
}

}  // namespace
}  // namespace pathex

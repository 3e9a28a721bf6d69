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

/// @file region_model.h
/// @brief Core domain types shared by every stage of the pipeline.
///
/// Coordinates are integer pixels in slide space at a single resolution
/// level. Bounding boxes are half-open: min is inclusive, max exclusive.
/// All types are immutable once constructed and safe to share between
/// concurrent readers.

#ifndef PATHEX_REGION_MODEL_H_
#define PATHEX_REGION_MODEL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pathex {

using ObjectId = std::int64_t;

struct BoundingBox {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  std::int64_t width() const { return max_x - min_x; }
  std::int64_t height() const { return max_y - min_y; }
  std::int64_t pixel_count() const { return width() * height(); }
  bool valid() const { return max_x > min_x && max_y > min_y; }
  bool Contains(const BoundingBox& other) const {
    return other.min_x >= min_x && other.min_y >= min_y &&
           other.max_x <= max_x && other.max_y <= max_y;
  }
  bool ContainsPixel(std::int64_t x, std::int64_t y) const {
    return x >= min_x && x < max_x && y >= min_y && y < max_y;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// True iff the half-open rectangles share at least one pixel.
bool BBoxIntersects(const BoundingBox& a, const BoundingBox& b);

/// Smallest box containing both inputs.
BoundingBox BBoxUnion(const BoundingBox& a, const BoundingBox& b);

/// Row-major binary occupancy grid local to an object's bounding box.
class ObjectMask {
 public:
  ObjectMask() = default;
  /// Throws ErrorKind::kShape when `bits` does not hold width*height cells.
  ObjectMask(std::int64_t width, std::int64_t height,
             std::vector<std::uint8_t> bits);

  std::int64_t width() const { return width_; }
  std::int64_t height() const { return height_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool at(std::int64_t x, std::int64_t y) const {
    return bits_[static_cast<std::size_t>(y * width_ + x)] != 0;
  }

  friend bool operator==(const ObjectMask&, const ObjectMask&) = default;

 private:
  std::int64_t width_ = 0;
  std::int64_t height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Count of set bits.
std::int64_t MaskArea(const ObjectMask& mask);

struct ObjectRecord {
  ObjectId object_id = 0;
  std::string class_label;
  BoundingBox bbox;
  ObjectMask mask;

  friend bool operator==(const ObjectRecord&, const ObjectRecord&) = default;
};

/// Grayscale crop of one object's bounding box, values in [0,1].
struct IntensityPatch {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<double> values;

  double at(std::int64_t x, std::int64_t y) const {
    return values[static_cast<std::size_t>(y * width + x)];
  }
};

/// The annotated objects of one slide, kept in ascending object_id order.
class RegionSet {
 public:
  RegionSet() = default;
  /// Sorts objects by id and validates them: unique ids, valid boxes inside
  /// the slide, masks matching their box and holding at least one pixel.
  /// Violations throw ErrorKind::kInvalidArgument.
  RegionSet(std::int64_t slide_width, std::int64_t slide_height,
            std::vector<ObjectRecord> objects, std::string source_id = "");

  std::int64_t slide_width() const { return slide_width_; }
  std::int64_t slide_height() const { return slide_height_; }
  const std::string& source_id() const { return source_id_; }
  const std::vector<ObjectRecord>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  bool empty() const { return objects_.empty(); }

  /// Binary search by id; nullptr when absent.
  const ObjectRecord* Find(ObjectId id) const;

  /// Equality of the slide geometry and objects; source_id is provenance
  /// only and is ignored.
  bool SameRegions(const RegionSet& other) const;

 private:
  std::int64_t slide_width_ = 0;
  std::int64_t slide_height_ = 0;
  std::vector<ObjectRecord> objects_;
  std::string source_id_;
};

}  // namespace pathex

#endif  // PATHEX_REGION_MODEL_H_

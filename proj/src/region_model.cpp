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

#include "pathex/region_model.h"

#include <algorithm>
#include <string>

#include "pathex/error.h"

namespace pathex {

bool BBoxIntersects(const BoundingBox& a, const BoundingBox& b) {
  return a.min_x < b.max_x && b.min_x < a.max_x && a.min_y < b.max_y &&
         b.min_y < a.max_y;
}

BoundingBox BBoxUnion(const BoundingBox& a, const BoundingBox& b) {
  return {std::min(a.min_x, b.min_x), std::min(a.min_y, b.min_y),
          std::max(a.max_x, b.max_x), std::max(a.max_y, b.max_y)};
}

ObjectMask::ObjectMask(std::int64_t width, std::int64_t height,
                       std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  if (width_ < 0 || height_ < 0 ||
      bits_.size() != static_cast<std::size_t>(width_ * height_)) {
    throw Error(ErrorKind::kShape,
                "mask of " + std::to_string(width_) + "x" +
                    std::to_string(height_) + " given " +
                    std::to_string(bits_.size()) + " cells");
  }
}

std::int64_t MaskArea(const ObjectMask& mask) {
  return std::count_if(mask.bits().begin(), mask.bits().end(),
                       [](std::uint8_t b) { return b != 0; });
}

RegionSet::RegionSet(std::int64_t slide_width, std::int64_t slide_height,
                     std::vector<ObjectRecord> objects, std::string source_id)
    : slide_width_(slide_width),
      slide_height_(slide_height),
      objects_(std::move(objects)),
      source_id_(std::move(source_id)) {
  if (slide_width_ <= 0 || slide_height_ <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "slide dimensions must be positive");
  }
  std::sort(objects_.begin(), objects_.end(),
            [](const ObjectRecord& a, const ObjectRecord& b) {
              return a.object_id < b.object_id;
            });
  const BoundingBox slide{0, 0, slide_width_, slide_height_};
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    const ObjectRecord& obj = objects_[i];
    const std::string tag = "object " + std::to_string(obj.object_id);
    if (obj.object_id < 0) {
      throw Error(ErrorKind::kInvalidArgument, tag + ": negative id");
    }
    if (i > 0 && objects_[i - 1].object_id == obj.object_id) {
      throw Error(ErrorKind::kInvalidArgument, tag + ": duplicate id");
    }
    if (!obj.bbox.valid() || !slide.Contains(obj.bbox)) {
      throw Error(ErrorKind::kInvalidArgument,
                  tag + ": bounding box empty or outside the slide");
    }
    if (obj.mask.width() != obj.bbox.width() ||
        obj.mask.height() != obj.bbox.height()) {
      throw Error(ErrorKind::kInvalidArgument,
                  tag + ": mask dimensions differ from bounding box");
    }
    if (MaskArea(obj.mask) == 0) {
      throw Error(ErrorKind::kInvalidArgument, tag + ": empty mask");
    }
  }
}

const ObjectRecord* RegionSet::Find(ObjectId id) const {
  auto it = std::lower_bound(
      objects_.begin(), objects_.end(), id,
      [](const ObjectRecord& o, ObjectId v) { return o.object_id < v; });
  if (it == objects_.end() || it->object_id != id) return nullptr;
  return &*it;
}

bool RegionSet::SameRegions(const RegionSet& other) const {
  return slide_width_ == other.slide_width_ &&
         slide_height_ == other.slide_height_ && objects_ == other.objects_;
}

}  // namespace pathex

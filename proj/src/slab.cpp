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

#include "pathex/slab.h"

#include <algorithm>
#include <string>

#include "pathex/error.h"

namespace pathex {

ObjectView Slab::View(std::size_t slot) const {
  ObjectView view;
  const std::size_t offset = slot * plane_size();
  view.mask = masks.data() + offset;
  view.values = patches.data() + offset;
  view.width = boxes[slot].width();
  view.height = boxes[slot].height();
  view.stride = bucket_edge;
  view.bbox = boxes[slot];
  return view;
}

Slab EncodeSlab(const SlabPlan& entry, const RegionSet& regions,
                const SlideSource& slide) {
  if (entry.object_ids.empty()) {
    throw Error(ErrorKind::kPlanCorrupt, "slab entry has no objects");
  }
  Slab slab;
  slab.bucket_edge = entry.bucket_edge;
  const std::size_t plane = slab.plane_size();
  const std::size_t depth = entry.object_ids.size();
  slab.patches.assign(plane * depth, 0.0);
  slab.masks.assign(plane * depth, 0);
  slab.id_map = entry.object_ids;
  slab.boxes.reserve(depth);

  std::vector<double> window;
  for (std::size_t slot = 0; slot < depth; ++slot) {
    const ObjectId id = entry.object_ids[slot];
    const ObjectRecord* obj = regions.Find(id);
    if (obj == nullptr) {
      throw Error(ErrorKind::kPlanCorrupt,
                  "object " + std::to_string(id) + " is not in the region set");
    }
    const std::int64_t w = obj->bbox.width();
    const std::int64_t h = obj->bbox.height();
    if (w > slab.bucket_edge || h > slab.bucket_edge) {
      throw Error(ErrorKind::kPlanCorrupt,
                  "object " + std::to_string(id) + " does not fit bucket " +
                      std::to_string(slab.bucket_edge));
    }
    slab.boxes.push_back(obj->bbox);
    window.resize(static_cast<std::size_t>(w * h));
    try {
      slide.ReadWindow(obj->bbox, window);
    } catch (const Error& e) {
      throw Error(e.kind(), "object " + std::to_string(id) + ": " + e.what());
    }
    const auto& bits = obj->mask.bits();
    double* dst_values = slab.patches.data() + slot * plane;
    std::uint8_t* dst_mask = slab.masks.data() + slot * plane;
    for (std::int64_t y = 0; y < h; ++y) {
      const auto src = static_cast<std::size_t>(y * w);
      const auto dst = static_cast<std::size_t>(y * slab.bucket_edge);
      std::copy_n(window.begin() + src, w, dst_values + dst);
      std::copy_n(bits.begin() + src, w, dst_mask + dst);
    }
  }
  return slab;
}

}  // namespace pathex

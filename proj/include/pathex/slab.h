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

#ifndef PATHEX_SLAB_H_
#define PATHEX_SLAB_H_

#include <cstdint>
#include <vector>

#include "pathex/batch_plan.h"
#include "pathex/object_view.h"
#include "pathex/region_model.h"
#include "pathex/slide_source.h"

namespace pathex {

/// Padded stack of equally sized object crops. Slot s occupies plane s of
/// both `patches` and `masks`; each object is anchored at the plane's top
/// left and the remainder is zero (mask 0, intensity 0).
struct Slab {
  std::int64_t bucket_edge = 0;
  std::vector<double> patches;
  std::vector<std::uint8_t> masks;
  std::vector<ObjectId> id_map;
  std::vector<BoundingBox> boxes;

  std::size_t depth() const { return id_map.size(); }
  std::size_t plane_size() const {
    return static_cast<std::size_t>(bucket_edge * bucket_edge);
  }
  ObjectView View(std::size_t slot) const;
};

/// Throws kPlanCorrupt for an empty entry, unknown ids or objects that do
/// not fit the bucket; read failures rethrow kBounds naming the object.
Slab EncodeSlab(const SlabPlan& entry, const RegionSet& regions,
                const SlideSource& slide);

}  // namespace pathex

#endif  // PATHEX_SLAB_H_

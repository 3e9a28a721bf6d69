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

/// @file object_view.h
/// @brief Strided read-only view of one object's mask and intensities.
///
/// The same view type addresses an unpadded per-object crop and a slot in
/// a padded slab plane. Kernels only ever visit the width x height window
/// and gate every access on the mask, so padding never contributes.

#ifndef PATHEX_OBJECT_VIEW_H_
#define PATHEX_OBJECT_VIEW_H_

#include <cstdint>

#include "pathex/region_model.h"

namespace pathex {

struct ObjectView {
  const std::uint8_t* mask = nullptr;
  const double* values = nullptr;
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t stride = 0;
  BoundingBox bbox;  // slide placement of the window

  bool in(std::int64_t x, std::int64_t y) const {
    return x >= 0 && y >= 0 && x < width && y < height &&
           mask[y * stride + x] != 0;
  }
  /// Unchecked; caller guarantees (x, y) lies in the window.
  bool set(std::int64_t x, std::int64_t y) const { return mask[y * stride + x] != 0; }
  double value(std::int64_t x, std::int64_t y) const { return values[y * stride + x]; }
};

/// View over an object's own mask and its unpadded patch. Throws kShape
/// when the patch and mask dimensions differ.
ObjectView MakeView(const ObjectRecord& object, const IntensityPatch& patch);

}  // namespace pathex

#endif  // PATHEX_OBJECT_VIEW_H_

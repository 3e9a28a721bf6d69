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

/// @file texture_features.h
/// @brief Texture family: 13 Haralick statistics for every (scale, angle).
///
/// In-mask intensities are min-max quantized to 8 levels per object. Pairs
/// are counted only when both pixels lie in the mask, in both directions,
/// so the co-occurrence matrix is symmetric. Offsets use image axes (y
/// down): 0 deg (d,0), 45 deg (d,-d), 90 deg (0,-d), 135 deg (-d,-d).

#ifndef PATHEX_TEXTURE_FEATURES_H_
#define PATHEX_TEXTURE_FEATURES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pathex/manifest.h"
#include "pathex/object_view.h"

namespace pathex {

/// Level per window pixel (0 off-mask). Constant objects map to level 0.
std::vector<std::uint8_t> Quantize(const ObjectView& view);

struct Offset {
  int dx = 0;
  int dy = 0;
};
Offset TextureOffset(int scale, int angle_degrees);

struct Glcm {
  std::array<double, kGrayLevels * kGrayLevels> p{};  // row-major, sums to 1
  std::int64_t pair_count = 0;                        // ordered pairs before symmetrizing

  bool degenerate() const { return pair_count == 0; }
  double at(int i, int j) const { return p[i * kGrayLevels + j]; }
};

Glcm ComputeGlcm(const ObjectView& view, const std::vector<std::uint8_t>& levels,
                 int scale, int angle_degrees);

/// Haralick statistics in HaralickNames() order, log base 2. All zero for
/// a degenerate matrix.
std::array<double, kHaralickCount> Haralick13(const Glcm& glcm);

struct TextureResult {
  std::array<double, kTextureCount> values{};
  int degenerate_blocks = 0;
};

TextureResult TextureFeatures(const ObjectView& view);

}  // namespace pathex

#endif  // PATHEX_TEXTURE_FEATURES_H_

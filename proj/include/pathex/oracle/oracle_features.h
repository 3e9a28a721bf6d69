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

/// @file oracle_features.h
/// @brief Naive scalar reference for all 247 features.
///
/// Written independently of the engine kernels: contours come from
/// Suzuki-Abe border following, Euler numbers from flood fills, the hull
/// from gift wrapping, the distance transform from brute force and the
/// Zernike basis from factorials. Only the manifest layout is shared.

#ifndef PATHEX_ORACLE_ORACLE_FEATURES_H_
#define PATHEX_ORACLE_ORACLE_FEATURES_H_

#include <cstdint>
#include <vector>

#include "pathex/region_model.h"

namespace pathex::oracle {

struct OracleResult {
  std::vector<double> values;  // kFeatureCount, manifest order
  int degenerate_texture_blocks = 0;
  bool zero_intensity = false;
};

/// Throws kInvalidArgument for an empty mask or mismatched dimensions.
OracleResult OracleFeatures(const IntensityPatch& patch, const ObjectMask& mask,
                            const BoundingBox& bbox);

/// Sum of Suzuki-Abe border lengths through pixel centers (4*Area for at
/// most two pixels).
double OraclePerimeter(const ObjectMask& mask);

/// Components (8-connected) minus holes (4-connected background).
std::int64_t OracleEulerNumber(const ObjectMask& mask);

/// Squared distance from each mask pixel to the nearest non-mask pixel.
std::vector<std::int64_t> OracleSquaredDistances(const ObjectMask& mask);

}  // namespace pathex::oracle

#endif  // PATHEX_ORACLE_ORACLE_FEATURES_H_

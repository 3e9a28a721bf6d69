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

#ifndef PATHEX_INTENSITY_FEATURES_H_
#define PATHEX_INTENSITY_FEATURES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pathex/manifest.h"
#include "pathex/object_view.h"
#include "pathex/shape_features.h"

namespace pathex {

/// In-mask pixels with a 4-neighbour outside the mask or the window.
/// One flag per window pixel.
std::vector<std::uint8_t> EdgePixels(const ObjectView& view);

using IntensityVector = std::array<double, kIntensityCount>;

/// Quantiles are type 7; StdIntensity is the population deviation. When
/// all values are equal the deviation is exactly 0 and the mean is that
/// value. The weighted centroid falls back to the binary centroid when the
/// intensities are constant or sum to zero.
IntensityVector IntensityFeatures(const ObjectView& view, const RawMoments& raw);
IntensityVector IntensityFeatures(const ObjectView& view);

}  // namespace pathex

#endif  // PATHEX_INTENSITY_FEATURES_H_

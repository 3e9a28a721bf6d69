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

/// @file distribution_features.h
/// @brief Intensity Distribution family: 12 radial bins x (FracAtD,
/// MeanFrac, RadialCV) followed by 30 Zernike magnitudes and 30 phases.
///
/// Normalized radius r = dc / (dc + de), dc the distance to the binary
/// centroid and de the distance transform value. Wedges split the angle
/// atan2(dy, dx) around the centroid into 8 equal sectors.
///
/// Zernike moments map the object onto the unit disk centered at the
/// centroid with radius R = (largest centroid distance) + 1:
///   A_nm = (n+1)/pi * sum R_nm(rho) e^{-i m theta} I dA,  dA = 1/R^2
/// Magnitude is |A_nm| over the summed intensity.

#ifndef PATHEX_DISTRIBUTION_FEATURES_H_
#define PATHEX_DISTRIBUTION_FEATURES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pathex/manifest.h"
#include "pathex/object_view.h"
#include "pathex/shape_features.h"

namespace pathex {

struct RadialCoordinates {
  std::vector<double> r;   // per window pixel, 0 off-mask
  std::vector<int> bin;    // per window pixel, -1 off-mask
};

RadialCoordinates RadialCoordinate(const ObjectView& view, const ObjectGeometry& geometry);

int WedgeIndex(double dx, double dy);

struct RadialProfile {
  std::array<double, kRadialBins> frac_at_d{};
  std::array<double, kRadialBins> mean_frac{};
  std::array<double, kRadialBins> radial_cv{};
  bool zero_intensity = false;
};

RadialProfile RadialDistribution(const ObjectView& view, const ObjectGeometry& geometry);

struct ZernikeSet {
  std::array<double, kZernikeCount> magnitude{};
  std::array<double, kZernikeCount> phase{};
};

ZernikeSet ZernikeFeatures(const ObjectView& view, const CentralMoments& central);

struct DistributionResult {
  std::array<double, kDistributionCount> values{};
  bool zero_intensity = false;
};

DistributionResult DistributionFeatures(const ObjectView& view,
                                        const ObjectGeometry& geometry);

}  // namespace pathex

#endif  // PATHEX_DISTRIBUTION_FEATURES_H_

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

/// @file manifest.h
/// @brief The ordered 247-feature schema, version "pathex-247/v1".
///
/// Layout: SizeShape (30), Texture (104 = 13 Haralick statistics x 4 angles
/// x 2 scales, scale-major, angle-minor, statistic-innermost), Intensity
/// (17), Distribution (96 = 12 radial bins x 3 statistics + 30 Zernike
/// magnitudes + 30 Zernike phases).

#ifndef PATHEX_MANIFEST_H_
#define PATHEX_MANIFEST_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathex {

enum class FeatureFamily { kSizeShape, kTexture, kIntensity, kDistribution };

std::string_view FamilyName(FeatureFamily family);

inline constexpr std::string_view kManifestVersion = "pathex-247/v1";
inline constexpr std::size_t kFeatureCount = 247;

inline constexpr std::size_t kShapeOffset = 0;
inline constexpr std::size_t kShapeCount = 30;
inline constexpr std::size_t kTextureOffset = kShapeOffset + kShapeCount;
inline constexpr std::size_t kTextureCount = 104;
inline constexpr std::size_t kIntensityOffset = kTextureOffset + kTextureCount;
inline constexpr std::size_t kIntensityCount = 17;
inline constexpr std::size_t kDistributionOffset =
    kIntensityOffset + kIntensityCount;
inline constexpr std::size_t kDistributionCount = 96;
static_assert(kDistributionOffset + kDistributionCount == kFeatureCount);

// Texture configuration.
inline constexpr int kGrayLevels = 8;
inline constexpr std::array<int, 2> kTextureScales{1, 3};
inline constexpr std::array<int, 4> kTextureAngles{0, 45, 90, 135};
inline constexpr std::size_t kHaralickCount = 13;

// Radial distribution configuration.
inline constexpr int kRadialBins = 12;
inline constexpr int kRadialWedges = 8;
inline constexpr int kZernikeMaxDegree = 9;
inline constexpr std::size_t kZernikeCount = 30;

/// Zernike (n, m) pairs with n <= 9, m >= 0, n - m even; n-major, m-minor.
const std::array<std::pair<int, int>, kZernikeCount>& ZernikeIndices();

/// Names of the 30 shape features in manifest order (without prefix).
const std::array<std::string_view, kShapeCount>& ShapeFeatureNames();
const std::array<std::string_view, kHaralickCount>& HaralickNames();
const std::array<std::string_view, kIntensityCount>& IntensityFeatureNames();

struct ManifestEntry {
  std::string name;
  FeatureFamily family;
  std::string description;
};

class FeatureManifest {
 public:
  static const FeatureManifest& Canonical();

  std::string_view version() const { return kManifestVersion; }
  const std::vector<ManifestEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<std::size_t> IndexOf(std::string_view name) const;
  std::size_t FamilyCount(FeatureFamily family) const;

 private:
  FeatureManifest();
  std::vector<ManifestEntry> entries_;
};

}  // namespace pathex

#endif  // PATHEX_MANIFEST_H_

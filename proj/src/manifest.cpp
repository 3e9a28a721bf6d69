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

#include "pathex/manifest.h"

#include <algorithm>
#include <unordered_map>

namespace pathex {

std::string_view FamilyName(FeatureFamily family) {
  switch (family) {
    case FeatureFamily::kSizeShape: return "SizeShape";
    case FeatureFamily::kTexture: return "Texture";
    case FeatureFamily::kIntensity: return "Intensity";
    case FeatureFamily::kDistribution: return "Distribution";
  }
  return "";
}

const std::array<std::pair<int, int>, kZernikeCount>& ZernikeIndices() {
  static const auto indices = [] {
    std::array<std::pair<int, int>, kZernikeCount> out{};
    std::size_t k = 0;
    for (int n = 0; n <= kZernikeMaxDegree; ++n) {
      for (int m = n % 2; m <= n; m += 2) out[k++] = {n, m};
    }
    return out;
  }();
  return indices;
}

const std::array<std::string_view, kShapeCount>& ShapeFeatureNames() {
  static constexpr std::array<std::string_view, kShapeCount> kNames{
      "Area", "Perimeter", "ConvexArea", "Solidity", "Extent",
      "Eccentricity", "Orientation", "MajorAxisLength", "MinorAxisLength",
      "FormFactor", "Compactness", "MaxFeretDiameter", "MinFeretDiameter",
      "EulerNumber", "BBoxMinX", "BBoxMinY", "BBoxMaxX", "BBoxMaxY",
      "CenterX", "CenterY", "MeanRadius", "MedianRadius", "MaxRadius",
      "Hu1", "Hu2", "Hu3", "Hu4", "Hu5", "Hu6", "Hu7"};
  return kNames;
}

const std::array<std::string_view, kHaralickCount>& HaralickNames() {
  static constexpr std::array<std::string_view, kHaralickCount> kNames{
      "AngularSecondMoment", "Contrast", "Correlation", "Variance",
      "InverseDifferenceMoment", "SumAverage", "SumVariance", "SumEntropy",
      "Entropy", "DifferenceVariance", "DifferenceEntropy", "InfoMeas1",
      "InfoMeas2"};
  return kNames;
}

const std::array<std::string_view, kIntensityCount>& IntensityFeatureNames() {
  static constexpr std::array<std::string_view, kIntensityCount> kNames{
      "IntegratedIntensity", "MeanIntensity", "StdIntensity", "MinIntensity",
      "MaxIntensity", "MedianIntensity", "MADIntensity",
      "LowerQuartileIntensity", "UpperQuartileIntensity", "MassDisplacement",
      "IntegratedEdgeIntensity", "MeanEdgeIntensity", "StdEdgeIntensity",
      "MinEdgeIntensity", "MaxEdgeIntensity", "CMX", "CMY"};
  return kNames;
}

namespace {

std::string ShapeDescription(std::string_view name) {
  static const std::unordered_map<std::string_view, std::string_view> kText{
      {"Area", "pixel count"},
      {"Perimeter", "8-connected contour length through pixel centers"},
      {"ConvexArea", "pixels covered by the convex hull of pixel centers"},
      {"Solidity", "Area / ConvexArea"},
      {"Extent", "Area / bounding box area"},
      {"Eccentricity", "best-fit ellipse eccentricity"},
      {"Orientation", "ellipse major axis angle from x, degrees in (-90, 90]"},
      {"MajorAxisLength", "best-fit ellipse major axis"},
      {"MinorAxisLength", "best-fit ellipse minor axis"},
      {"FormFactor", "4*pi*Area / Perimeter^2"},
      {"Compactness", "Perimeter^2 / (4*pi*Area)"},
      {"MaxFeretDiameter", "largest caliper width of the hull"},
      {"MinFeretDiameter", "smallest caliper width over hull edge directions"},
      {"EulerNumber", "components minus holes (8/4 connectivity)"},
      {"CenterX", "binary centroid x, slide pixels"},
      {"CenterY", "binary centroid y, slide pixels"},
      {"MeanRadius", "mean distance to background over object pixels"},
      {"MedianRadius", "median distance to background"},
      {"MaxRadius", "largest distance to background"},
  };
  if (auto it = kText.find(name); it != kText.end()) return std::string(it->second);
  if (name.starts_with("BBox")) return "bounding box coordinate, slide pixels";
  return "Hu invariant moment " + std::string(name.substr(2));
}

}  // namespace

FeatureManifest::FeatureManifest() {
  entries_.reserve(kFeatureCount);
  for (std::string_view name : ShapeFeatureNames()) {
    entries_.push_back({"SizeShape_" + std::string(name),
                        FeatureFamily::kSizeShape, ShapeDescription(name)});
  }
  for (int scale : kTextureScales) {
    for (int angle : kTextureAngles) {
      for (std::string_view stat : HaralickNames()) {
        entries_.push_back(
            {"Texture_" + std::string(stat) + "_s" + std::to_string(scale) +
                 "_a" + std::to_string(angle),
             FeatureFamily::kTexture,
             "Haralick " + std::string(stat) + " of the 8-level GLCM at offset " +
                 std::to_string(scale) + " px, " + std::to_string(angle) +
                 " degrees"});
      }
    }
  }
  for (std::string_view name : IntensityFeatureNames()) {
    entries_.push_back({"Intensity_" + std::string(name),
                        FeatureFamily::kIntensity,
                        std::string(name) + " of in-mask intensities"});
  }
  const std::array<std::pair<std::string_view, std::string_view>, 3> radial{{
      {"FracAtD", "fraction of total intensity in radial bin"},
      {"MeanFrac", "intensity fraction over pixel fraction in radial bin"},
      {"RadialCV", "coefficient of variation across 8 wedges in radial bin"},
  }};
  for (const auto& [stat, text] : radial) {
    for (int b = 0; b < kRadialBins; ++b) {
      entries_.push_back({"Distribution_" + std::string(stat) + "_b" +
                              std::to_string(b),
                          FeatureFamily::kDistribution,
                          std::string(text) + " " + std::to_string(b)});
    }
  }
  for (const char* part : {"Mag", "Phase"}) {
    for (const auto& [n, m] : ZernikeIndices()) {
      entries_.push_back({"Distribution_Zernike" + std::string(part) + "_n" +
                              std::to_string(n) + "_m" + std::to_string(m),
                          FeatureFamily::kDistribution,
                          std::string("intensity Zernike ") +
                              (part[0] == 'M' ? "magnitude" : "phase")});
    }
  }
}

const FeatureManifest& FeatureManifest::Canonical() {
  static const FeatureManifest manifest;
  return manifest;
}

std::optional<std::size_t> FeatureManifest::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t FeatureManifest::FamilyCount(FeatureFamily family) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [family](const ManifestEntry& e) { return e.family == family; }));
}

}  // namespace pathex

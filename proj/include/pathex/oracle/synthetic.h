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

/// @file synthetic.h
/// @brief Seeded synthetic slides with matching GeoJSON, label mask and
/// class map, so both ingestion paths see identical ground truth.
///
/// Each object is rendered as one 4-connected mask (diagonal-only contacts
/// are filled in), placed with non-overlapping, gap-separated boxes. The
/// GeoJSON rings follow the crack boundary of each mask, so pixel-center
/// rasterization reproduces it exactly.

#ifndef PATHEX_ORACLE_SYNTHETIC_H_
#define PATHEX_ORACLE_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pathex/image_io.h"
#include "pathex/label_mask.h"
#include "pathex/region_model.h"

namespace pathex::oracle {

enum class SyntheticShape { kEllipse, kRectangle, kBlob, kRing, kLine, kPixel };
enum class IntensityModel { kConstant, kRamp, kGaussian, kNoise };

struct SyntheticSpec {
  std::uint64_t seed = 1;
  std::int64_t slide_width = 2048;
  std::int64_t slide_height = 2048;
  std::size_t object_count = 100;
  std::int64_t min_size = 8;
  std::int64_t max_size = 32;
  // Object i takes shapes[i % shapes.size()] and
  // intensities[(i / shapes.size()) % intensities.size()].
  std::vector<SyntheticShape> shapes{SyntheticShape::kEllipse, SyntheticShape::kRectangle,
                                     SyntheticShape::kBlob,    SyntheticShape::kRing,
                                     SyntheticShape::kLine,    SyntheticShape::kPixel};
  std::vector<IntensityModel> intensities{IntensityModel::kConstant, IntensityModel::kRamp,
                                          IntensityModel::kGaussian, IntensityModel::kNoise};
  std::int64_t gap = 2;
  std::uint32_t background = 235;
};

/// Comma separated names: ellipse, rectangle, blob, ring, line, pixel.
std::vector<SyntheticShape> ParseShapeList(std::string_view text);
std::vector<IntensityModel> ParseIntensityList(std::string_view text);

struct SyntheticSlide {
  Raster slide;  // 8-bit gray
  RegionSet regions;
  nlohmann::json geojson;
  LabelRaster labels;
  ClassMap classes;
};

/// Throws kPacking when an object cannot be placed, kInvalidArgument for
/// a malformed spec.
SyntheticSlide GenerateSyntheticSlide(const SyntheticSpec& spec);

/// Writes slide.tif, annotations.geojson, labels.tif and classes.json.
void WriteSyntheticSlide(const SyntheticSlide& slide, const std::filesystem::path& dir);

inline constexpr const char* kSlideFile = "slide.tif";
inline constexpr const char* kGeoJsonFile = "annotations.geojson";
inline constexpr const char* kLabelFile = "labels.tif";
inline constexpr const char* kClassFile = "classes.json";

}  // namespace pathex::oracle

#endif  // PATHEX_ORACLE_SYNTHETIC_H_

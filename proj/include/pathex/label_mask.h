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

#ifndef PATHEX_LABEL_MASK_H_
#define PATHEX_LABEL_MASK_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pathex/region_model.h"

namespace pathex {

/// Integer label raster; 0 is background.
struct LabelRaster {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<std::uint32_t> labels;
};

struct BinaryRaster {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<std::uint8_t> bits;
};

/// Sidecar map from label value to class label.
using ClassMap = std::map<ObjectId, std::string>;

/// Parses `{"<label>": "<class>", ...}`. Throws kParse.
ClassMap ParseClassMap(std::string_view json_text);
ClassMap ReadClassMapFile(const std::filesystem::path& path);

/// Reads a single-channel 8/16/32-bit TIFF or PNG label image.
LabelRaster ReadLabelRaster(const std::filesystem::path& path);

/// One object per distinct nonzero label; object_id = label value. Label
/// identity, not connectivity, defines objects. Throws kEmptyRegionSet when
/// every pixel is background.
RegionSet LoadLabelMask(const LabelRaster& raster, const ClassMap& classes = {},
                        std::string source_id = "");

/// Labels the foreground of a binary raster with 4- or 8-connectivity.
/// Objects are numbered 1..K in raster-scan order of their first pixel.
/// Throws kEmptyRegionSet when the raster has no foreground.
RegionSet ConnectedComponents(const BinaryRaster& raster, int connectivity);

}  // namespace pathex

#endif  // PATHEX_LABEL_MASK_H_

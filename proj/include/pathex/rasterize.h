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

#ifndef PATHEX_RASTERIZE_H_
#define PATHEX_RASTERIZE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pathex/geojson.h"
#include "pathex/region_model.h"

namespace pathex {

/// Even-odd rasterization at pixel centers. A pixel is set when
/// (x+0.5, y+0.5) is inside the outer ring and outside every hole; centers
/// exactly on an edge follow the top-left rule (left edges and upper
/// vertices are inside). The scan is clamped to the slide. Throws
/// kEmptyObject when no pixel is set.
ObjectRecord RasterizeAnnotation(const Annotation& annotation, ObjectId id,
                                 std::int64_t slide_width,
                                 std::int64_t slide_height);

/// A skipped annotation, reported on the diagnostic stream.
struct IngestWarning {
  std::string annotation_id;
  ObjectId object_id = -1;
  std::string reason;
};

/// One JSON line describing the warning (no trailing newline).
std::string WarningJsonLine(const IngestWarning& warning);

struct IngestedAnnotations {
  RegionSet regions;
  std::vector<IngestWarning> warnings;
};

/// Rasterizes every annotation; empty ones are skipped with a warning.
IngestedAnnotations RegionsFromAnnotations(const AnnotationSet& annotations,
                                           std::int64_t slide_width,
                                           std::int64_t slide_height,
                                           std::string source_id = "");

}  // namespace pathex

#endif  // PATHEX_RASTERIZE_H_

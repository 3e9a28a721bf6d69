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

/// @file geojson.h
/// @brief GeoJSON annotation parsing (RFC 7946, pixel coordinates).

#ifndef PATHEX_GEOJSON_H_
#define PATHEX_GEOJSON_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pathex/region_model.h"

namespace pathex {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Closed coordinate ring: first point equals last, at least four points.
using Ring = std::vector<Point2>;

struct Annotation {
  std::string annotation_id;
  std::string class_label;
  Ring outer_ring;
  std::vector<Ring> holes;
  /// Position of the source Feature in the document's feature list.
  std::size_t feature_index = 0;
  /// Part number for MultiPolygon sources, -1 for plain Polygons.
  int part_index = -1;
};

/// Parsed annotations plus the source document, kept so that write-back can
/// reproduce geometry and properties verbatim.
struct AnnotationSet {
  std::vector<Annotation> features;
  nlohmann::json document;
};

/// Accepts a FeatureCollection, a single Feature or a bare array of
/// Features. Errors: kParse (malformed JSON / structure), kUnsupportedGeometry
/// (non-polygonal geometry), kInvalidRing (unclosed or short ring).
AnnotationSet ParseGeoJson(std::string_view payload);

AnnotationSet ReadGeoJsonFile(const std::filesystem::path& path);

/// Object ids for each annotation, index-aligned with `set.features`.
/// When every annotation id is a plain non-negative decimal integer the ids
/// are used as-is; otherwise annotations are numbered 1..N in document order.
/// Throws kInvalidArgument when numeric ids collide.
std::vector<ObjectId> AssignObjectIds(const AnnotationSet& set);

/// The pixel range covered by a ring's coordinates (half-open), before
/// clamping to the slide.
BoundingBox RingPixelBounds(const Ring& ring);

}  // namespace pathex

#endif  // PATHEX_GEOJSON_H_

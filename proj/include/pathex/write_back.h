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

#ifndef PATHEX_WRITE_BACK_H_
#define PATHEX_WRITE_BACK_H_

#include "json.hpp"
#include "pathex/feature_table.h"
#include "pathex/geojson.h"
#include "pathex/manifest.h"
#include "pathex/spatial_index.h"

namespace pathex {

/// Joins feature rows back onto the source annotations. The returned
/// document is the input document with `properties.pathomics` added to each
/// feature: a {feature_name: value} object, or null for annotations that
/// produced no row (skipped at ingestion). MultiPolygon features receive an
/// array with one such entry per part. Geometry and other properties are
/// copied unchanged; NaN values serialize as null.
///
/// Throws kJoin when a row's object id is not in the index, or when the
/// index does not place an annotation's object inside that annotation's
/// footprint.
nlohmann::json WriteBack(const SpatialIndex& index, const FeatureTable& table,
                         const AnnotationSet& annotations,
                         const FeatureManifest& manifest);

}  // namespace pathex

#endif  // PATHEX_WRITE_BACK_H_

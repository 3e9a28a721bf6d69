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

#include "pathex/oracle/oracle_extract.h"

#include "pathex/manifest.h"
#include "pathex/oracle/oracle_features.h"

namespace pathex::oracle {

std::vector<ObjectId> OracleQuery(const RegionSet& regions, const BoundingBox& window) {
  std::vector<ObjectId> ids;
  for (const ObjectRecord& obj : regions.objects()) {
    if (BBoxIntersects(obj.bbox, window)) ids.push_back(obj.object_id);
  }
  return ids;
}

FeatureTable OracleExtract(const RegionSet& regions, const SlideSource& slide) {
  FeatureTable table;
  for (const ObjectRecord& obj : regions.objects()) {
    const IntensityPatch patch = ReadPatch(slide, obj.bbox);
    OracleResult r = OracleFeatures(patch, obj.mask, obj.bbox);
    FeatureRow row;
    row.object_id = obj.object_id;
    row.class_label = obj.class_label;
    row.center_x = r.values[kShapeOffset + 18];
    row.center_y = r.values[kShapeOffset + 19];
    row.values = std::move(r.values);
    table.rows.push_back(std::move(row));
    ObjectDiagnostic diag;
    diag.object_id = obj.object_id;
    diag.degenerate_texture_blocks = r.degenerate_texture_blocks;
    if (r.degenerate_texture_blocks > 0) diag.flags |= kDegenerateTexture;
    if (r.zero_intensity) diag.flags |= kZeroIntensity;
    if (diag.flags != 0) table.diagnostics.push_back(diag);
  }
  return table;
}

}  // namespace pathex::oracle

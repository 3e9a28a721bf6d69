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

#include "pathex/write_back.h"

#include <algorithm>
#include <unordered_map>

#include "pathex/error.h"

namespace pathex {
namespace {

using nlohmann::json;

json& Features(json& doc) {
  return doc.is_array() ? doc : doc["features"];
}

json PathomicsObject(const FeatureRow& row, const FeatureManifest& manifest) {
  json obj = json::object();
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    obj[manifest.entries()[i].name] = row.values[i];
  }
  return obj;
}

}  // namespace

json WriteBack(const SpatialIndex& index, const FeatureTable& table,
               const AnnotationSet& annotations, const FeatureManifest& manifest) {
  std::unordered_map<ObjectId, const FeatureRow*> rows;
  for (const FeatureRow& row : table.rows) {
    if (!index.Contains(row.object_id)) {
      throw Error(ErrorKind::kJoin, "row for object " +
                                        std::to_string(row.object_id) +
                                        " has no indexed region");
    }
    rows[row.object_id] = &row;
  }

  const std::vector<ObjectId> ids = AssignObjectIds(annotations);
  json out = annotations.document;
  json& features = Features(out);
  for (std::size_t i = 0; i < annotations.features.size(); ++i) {
    const Annotation& a = annotations.features[i];
    json value = nullptr;
    if (auto it = rows.find(ids[i]); it != rows.end()) {
      const std::vector<ObjectId> hits =
          index.QueryWindow(RingPixelBounds(a.outer_ring));
      if (!std::binary_search(hits.begin(), hits.end(), ids[i])) {
        throw Error(ErrorKind::kJoin, "object " + std::to_string(ids[i]) +
                                          " is not indexed inside annotation " +
                                          a.annotation_id);
      }
      value = PathomicsObject(*it->second, manifest);
    }
    json& feature = features[a.feature_index];
    json& props = feature["properties"];
    if (!props.is_object()) props = json::object();
    if (a.part_index < 0) {
      props["pathomics"] = std::move(value);
    } else {
      json& parts = props["pathomics"];
      if (!parts.is_array()) parts = json::array();
      if (parts.size() <= static_cast<std::size_t>(a.part_index)) {
        parts.get_ref<json::array_t&>().resize(a.part_index + 1);
      }
      parts[a.part_index] = std::move(value);
    }
  }
  return out;
}

}  // namespace pathex

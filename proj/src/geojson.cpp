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

#include "pathex/geojson.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pathex/error.h"

namespace pathex {
namespace {

using nlohmann::json;

std::string IdToString(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer() || id.is_number_unsigned()) return id.dump();
  if (id.is_number_float()) return id.dump();
  return {};
}

std::string FeatureId(const json& feature, std::size_t index) {
  if (auto it = feature.find("id"); it != feature.end()) {
    std::string id = IdToString(*it);
    if (!id.empty()) return id;
  }
  if (auto props = feature.find("properties");
      props != feature.end() && props->is_object()) {
    for (const char* key : {"id", "object_id"}) {
      if (auto it = props->find(key); it != props->end()) {
        std::string id = IdToString(*it);
        if (!id.empty()) return id;
      }
    }
  }
  return std::to_string(index);
}

std::string ClassLabel(const json& feature) {
  auto props = feature.find("properties");
  if (props == feature.end() || !props->is_object()) return "unlabeled";
  if (auto cls = props->find("classification");
      cls != props->end() && cls->is_object()) {
    if (auto name = cls->find("name");
        name != cls->end() && name->is_string()) {
      return name->get<std::string>();
    }
  }
  if (auto cls = props->find("class"); cls != props->end() && cls->is_string()) {
    return cls->get<std::string>();
  }
  return "unlabeled";
}

Ring ParseRing(const json& coords, const std::string& id) {
  if (!coords.is_array()) {
    throw Error(ErrorKind::kParse, "feature " + id + ": ring is not an array");
  }
  Ring ring;
  ring.reserve(coords.size());
  for (const json& pt : coords) {
    if (!pt.is_array() || pt.size() < 2 || !pt[0].is_number() ||
        !pt[1].is_number()) {
      throw Error(ErrorKind::kParse,
                  "feature " + id + ": malformed coordinate");
    }
    ring.push_back({pt[0].get<double>(), pt[1].get<double>()});
  }
  if (ring.size() < 4 || ring.front() != ring.back()) {
    throw Error(ErrorKind::kInvalidRing,
                "feature " + id + ": ring must be closed with >= 4 points");
  }
  return ring;
}

void AppendPolygon(const json& rings, Annotation annotation,
                   std::vector<Annotation>& out) {
  if (!rings.is_array() || rings.empty()) {
    throw Error(ErrorKind::kParse,
                "feature " + annotation.annotation_id + ": empty polygon");
  }
  annotation.outer_ring = ParseRing(rings[0], annotation.annotation_id);
  for (std::size_t i = 1; i < rings.size(); ++i) {
    annotation.holes.push_back(ParseRing(rings[i], annotation.annotation_id));
  }
  out.push_back(std::move(annotation));
}

const json& FeatureList(const json& doc) {
  if (doc.is_array()) return doc;
  if (doc.is_object()) {
    const std::string type = doc.value("type", "");
    if (type == "FeatureCollection") {
      auto it = doc.find("features");
      if (it != doc.end() && it->is_array()) return *it;
      throw Error(ErrorKind::kParse, "FeatureCollection without features");
    }
  }
  throw Error(ErrorKind::kParse, "expected a FeatureCollection or Feature array");
}

}  // namespace

AnnotationSet ParseGeoJson(std::string_view payload) {
  AnnotationSet set;
  try {
    set.document = json::parse(payload.begin(), payload.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  // Wrap a lone Feature so that downstream indexing is uniform.
  if (set.document.is_object() && set.document.value("type", "") == "Feature") {
    set.document = json{{"type", "FeatureCollection"},
                         {"features", json::array({set.document})}};
  }
  const json& features = FeatureList(set.document);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const json& feature = features[i];
    if (!feature.is_object()) {
      throw Error(ErrorKind::kParse, "feature " + std::to_string(i) +
                                         " is not an object");
    }
    Annotation base;
    base.annotation_id = FeatureId(feature, i);
    base.class_label = ClassLabel(feature);
    base.feature_index = i;
    auto geom = feature.find("geometry");
    if (geom == feature.end() || !geom->is_object()) {
      throw Error(ErrorKind::kUnsupportedGeometry,
                  "feature " + base.annotation_id + " has no geometry");
    }
    const std::string type = geom->value("type", "");
    auto coords = geom->find("coordinates");
    if (type == "Polygon" && coords != geom->end()) {
      if (!seen.insert(base.annotation_id).second) {
        throw Error(ErrorKind::kParse,
                    "duplicate annotation id " + base.annotation_id);
      }
      AppendPolygon(*coords, std::move(base), set.features);
    } else if (type == "MultiPolygon" && coords != geom->end() &&
               coords->is_array()) {
      for (std::size_t part = 0; part < coords->size(); ++part) {
        Annotation piece = base;
        piece.annotation_id = base.annotation_id + "#" + std::to_string(part);
        piece.part_index = static_cast<int>(part);
        if (!seen.insert(piece.annotation_id).second) {
          throw Error(ErrorKind::kParse,
                      "duplicate annotation id " + piece.annotation_id);
        }
        AppendPolygon((*coords)[part], std::move(piece), set.features);
      }
    } else {
      throw Error(ErrorKind::kUnsupportedGeometry,
                  "feature " + base.annotation_id + " has geometry type '" +
                      type + "'");
    }
  }
  return set;
}

AnnotationSet ReadGeoJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGeoJson(buffer.str());
}

std::vector<ObjectId> AssignObjectIds(const AnnotationSet& set) {
  std::vector<ObjectId> ids;
  ids.reserve(set.features.size());
  bool numeric = true;
  for (const Annotation& a : set.features) {
    const std::string& s = a.annotation_id;
    ObjectId value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
        value < 0 || s.front() == '+' || s.front() == '-') {
      numeric = false;
      break;
    }
    ids.push_back(value);
  }
  if (!numeric) {
    ids.clear();
    for (std::size_t i = 0; i < set.features.size(); ++i) {
      ids.push_back(static_cast<ObjectId>(i + 1));
    }
    return ids;
  }
  std::vector<ObjectId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInvalidArgument, "numeric annotation ids collide");
  }
  return ids;
}

BoundingBox RingPixelBounds(const Ring& ring) {
  double min_x = ring.front().x, max_x = ring.front().x;
  double min_y = ring.front().y, max_y = ring.front().y;
  for (const Point2& p : ring) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // Pixel (x, y) can only be inside when its center lies in the ring's range.
  auto lo = [](double v) {
    return static_cast<std::int64_t>(std::ceil(v - 0.5));
  };
  auto hi = [](double v) {
    return static_cast<std::int64_t>(std::floor(v - 0.5)) + 1;
  };
  return {lo(min_x), lo(min_y), hi(max_x), hi(max_y)};
}

}  // namespace pathex

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

#include "pathex/label_mask.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "pathex/error.h"
#include "pathex/image_io.h"

namespace pathex {
namespace {

RegionSet RegionsFromLabels(std::int64_t width, std::int64_t height,
                            const std::vector<std::uint32_t>& labels,
                            const ClassMap& classes, std::string source_id) {
  std::map<std::uint32_t, BoundingBox> boxes;
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      const std::uint32_t v = labels[y * width + x];
      if (v == 0) continue;
      auto [it, inserted] = boxes.try_emplace(v, BoundingBox{x, y, x + 1, y + 1});
      if (!inserted) {
        BoundingBox& b = it->second;
        b.min_x = std::min(b.min_x, x);
        b.max_x = std::max(b.max_x, x + 1);
        b.max_y = y + 1;
      }
    }
  }
  if (boxes.empty()) {
    throw Error(ErrorKind::kEmptyRegionSet, "label raster has no foreground");
  }
  std::vector<ObjectRecord> objects;
  objects.reserve(boxes.size());
  for (const auto& [label, box] : boxes) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(box.pixel_count()), 0);
    for (std::int64_t y = box.min_y; y < box.max_y; ++y) {
      for (std::int64_t x = box.min_x; x < box.max_x; ++x) {
        if (labels[y * width + x] == label) {
          bits[(y - box.min_y) * box.width() + (x - box.min_x)] = 1;
        }
      }
    }
    ObjectRecord record;
    record.object_id = label;
    auto cls = classes.find(label);
    record.class_label = cls != classes.end() ? cls->second : "unlabeled";
    record.bbox = box;
    record.mask = ObjectMask(box.width(), box.height(), std::move(bits));
    objects.push_back(std::move(record));
  }
  return RegionSet(width, height, std::move(objects), std::move(source_id));
}

}  // namespace

ClassMap ParseClassMap(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "class map must be an object");
  ClassMap map;
  for (const auto& [key, value] : doc.items()) {
    ObjectId label = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), label);
    if (ec != std::errc() || ptr != key.data() + key.size() || label < 0 ||
        !value.is_string()) {
      throw Error(ErrorKind::kParse, "bad class map entry '" + key + "'");
    }
    map[label] = value.get<std::string>();
  }
  return map;
}

ClassMap ReadClassMapFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseClassMap(buffer.str());
}

LabelRaster ReadLabelRaster(const std::filesystem::path& path) {
  Raster raster = ReadRaster(path);
  if (raster.channels != 1) {
    throw Error(ErrorKind::kIo, path.string() + ": label mask must be single-channel");
  }
  return {raster.width, raster.height, std::move(raster.samples)};
}

RegionSet LoadLabelMask(const LabelRaster& raster, const ClassMap& classes,
                        std::string source_id) {
  if (raster.labels.size() !=
      static_cast<std::size_t>(raster.width * raster.height)) {
    throw Error(ErrorKind::kShape, "label raster size mismatch");
  }
  return RegionsFromLabels(raster.width, raster.height, raster.labels, classes,
                           std::move(source_id));
}

RegionSet ConnectedComponents(const BinaryRaster& raster, int connectivity) {
  if (connectivity != 4 && connectivity != 8) {
    throw Error(ErrorKind::kInvalidArgument, "connectivity must be 4 or 8");
  }
  const std::int64_t w = raster.width;
  const std::int64_t h = raster.height;
  if (raster.bits.size() != static_cast<std::size_t>(w * h)) {
    throw Error(ErrorKind::kShape, "binary raster size mismatch");
  }
  // Union-find over provisional labels, first-pass raster order.
  std::vector<std::uint32_t> provisional(raster.bits.size(), 0);
  std::vector<std::uint32_t> parent{0};
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (!raster.bits[y * w + x]) continue;
      std::uint32_t label = 0;
      auto visit = [&](std::int64_t nx, std::int64_t ny) {
        if (nx < 0 || ny < 0 || nx >= w) return;
        const std::uint32_t n = provisional[ny * w + nx];
        if (n == 0) return;
        if (label == 0) {
          label = n;
        } else {
          unite(label, n);
        }
      };
      visit(x - 1, y);
      visit(x, y - 1);
      if (connectivity == 8) {
        visit(x - 1, y - 1);
        visit(x + 1, y - 1);
      }
      if (label == 0) {
        label = static_cast<std::uint32_t>(parent.size());
        parent.push_back(label);
      }
      provisional[y * w + x] = label;
    }
  }
  // Roots are the minimum provisional label of each set, so numbering roots
  // in increasing order numbers components by their first scanned pixel.
  std::vector<std::uint32_t> final_label(parent.size(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t i = 1; i < parent.size(); ++i) {
    const std::uint32_t root = find(i);
    if (root == i) final_label[i] = ++next;
  }
  for (std::uint32_t& v : provisional) {
    if (v) v = final_label[find(v)];
  }
  return RegionsFromLabels(w, h, provisional, {}, "");
}

}  // namespace pathex

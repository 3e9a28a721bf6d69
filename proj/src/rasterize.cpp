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

#include "pathex/rasterize.h"

#include <algorithm>

#include "json.hpp"
#include "pathex/error.h"

namespace pathex {
namespace {

// x positions where the ring's edges cross the horizontal line y = cy.
void RowCrossings(const Ring& ring, double cy, std::vector<double>& out) {
  out.clear();
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point2& a = ring[i];
    const Point2& b = ring[j];
    if ((a.y > cy) != (b.y > cy)) {
      out.push_back(a.x + (cy - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }
  std::sort(out.begin(), out.end());
}

// Marks (or clears) pixels x0..x1-1 whose centers have an odd number of
// crossings strictly to their right.
void FillRow(const std::vector<double>& crossings, std::int64_t x0,
             std::int64_t x1, std::uint8_t value, std::uint8_t* row) {
  std::size_t passed = 0;  // crossings <= center
  for (std::int64_t x = x0; x < x1; ++x) {
    const double cx = static_cast<double>(x) + 0.5;
    while (passed < crossings.size() && crossings[passed] <= cx) ++passed;
    const std::size_t right = crossings.size() - passed;
    if (right % 2 == 1) row[x - x0] = value;
  }
}

}  // namespace

ObjectRecord RasterizeAnnotation(const Annotation& annotation, ObjectId id,
                                 std::int64_t slide_width,
                                 std::int64_t slide_height) {
  BoundingBox scan = RingPixelBounds(annotation.outer_ring);
  scan.min_x = std::max<std::int64_t>(scan.min_x, 0);
  scan.min_y = std::max<std::int64_t>(scan.min_y, 0);
  scan.max_x = std::min(scan.max_x, slide_width);
  scan.max_y = std::min(scan.max_y, slide_height);
  if (!scan.valid()) {
    throw Error(ErrorKind::kEmptyObject,
                "annotation " + annotation.annotation_id +
                    " covers no pixel centers");
  }

  const std::int64_t w = scan.width();
  const std::int64_t h = scan.height();
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(w * h), 0);
  std::vector<double> crossings;
  for (std::int64_t y = 0; y < h; ++y) {
    const double cy = static_cast<double>(scan.min_y + y) + 0.5;
    std::uint8_t* row = grid.data() + y * w;
    RowCrossings(annotation.outer_ring, cy, crossings);
    FillRow(crossings, scan.min_x, scan.max_x, 1, row);
    for (const Ring& hole : annotation.holes) {
      RowCrossings(hole, cy, crossings);
      FillRow(crossings, scan.min_x, scan.max_x, 0, row);
    }
  }

  std::int64_t lx = w, ly = h, hx = -1, hy = -1;
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (grid[y * w + x]) {
        lx = std::min(lx, x);
        hx = std::max(hx, x);
        ly = std::min(ly, y);
        hy = std::max(hy, y);
      }
    }
  }
  if (hx < 0) {
    throw Error(ErrorKind::kEmptyObject,
                "annotation " + annotation.annotation_id +
                    " rasterizes to zero pixels");
  }
  const std::int64_t mw = hx - lx + 1;
  const std::int64_t mh = hy - ly + 1;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(mw * mh));
  for (std::int64_t y = 0; y < mh; ++y) {
    std::copy_n(grid.begin() + (ly + y) * w + lx, mw, bits.begin() + y * mw);
  }
  ObjectRecord record;
  record.object_id = id;
  record.class_label = annotation.class_label;
  record.bbox = {scan.min_x + lx, scan.min_y + ly, scan.min_x + hx + 1,
                 scan.min_y + hy + 1};
  record.mask = ObjectMask(mw, mh, std::move(bits));
  return record;
}

std::string WarningJsonLine(const IngestWarning& warning) {
  nlohmann::json line = {{"warning", warning.reason},
                         {"annotation_id", warning.annotation_id},
                         {"object_id", warning.object_id}};
  return line.dump();
}

IngestedAnnotations RegionsFromAnnotations(const AnnotationSet& annotations,
                                           std::int64_t slide_width,
                                           std::int64_t slide_height,
                                           std::string source_id) {
  const std::vector<ObjectId> ids = AssignObjectIds(annotations);
  std::vector<ObjectRecord> objects;
  std::vector<IngestWarning> warnings;
  objects.reserve(annotations.features.size());
  for (std::size_t i = 0; i < annotations.features.size(); ++i) {
    const Annotation& a = annotations.features[i];
    try {
      objects.push_back(RasterizeAnnotation(a, ids[i], slide_width, slide_height));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmptyObject) throw;
      warnings.push_back({a.annotation_id, ids[i],
                          std::string(ErrorKindName(e.kind()))});
    }
  }
  return {RegionSet(slide_width, slide_height, std::move(objects),
                    std::move(source_id)),
          std::move(warnings)};
}

}  // namespace pathex

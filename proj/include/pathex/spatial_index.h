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

/// @file spatial_index.h
/// @brief Static R-tree over object bounding boxes.
///
/// The tree is bulk loaded with sort-tile-recursive (STR) packing and never
/// modified afterwards, so concurrent queries need no synchronisation.
/// Query results are exact and sorted by object id.

#ifndef PATHEX_SPATIAL_INDEX_H_
#define PATHEX_SPATIAL_INDEX_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathex/region_model.h"

namespace pathex {

struct IndexEntry {
  ObjectId object_id = 0;
  BoundingBox box;
};

struct IndexOptions {
  int max_entries = 16;
  int min_entries = 6;
};

struct IndexStats {
  int height = 0;  // 1 for a root that is a leaf
  std::size_t node_count = 0;
  std::size_t leaf_count = 0;
  std::size_t entry_count = 0;
};

class SpatialIndex {
 public:
  /// Throws kIndexBuild for an empty input or inconsistent options.
  static SpatialIndex Build(const RegionSet& regions, IndexOptions options = {});
  static SpatialIndex Build(std::vector<IndexEntry> entries,
                            IndexOptions options = {});

  /// Ids of all entries whose box intersects `window`, ascending.
  std::vector<ObjectId> QueryWindow(const BoundingBox& window) const;
  /// Same as QueryWindow with the 1x1 window at (x, y).
  std::vector<ObjectId> QueryPoint(std::int64_t x, std::int64_t y) const;

  bool Contains(ObjectId id) const;
  IndexStats Stats() const;
  const BoundingBox& RootEnvelope() const { return nodes_[root_].envelope; }

  /// Leaf entries in tree order.
  std::vector<IndexEntry> LeafEntries() const;

  /// Structural audit: every envelope equals the union of its children,
  /// non-root nodes respect the fanout limits, and all leaves sit at the
  /// same depth. Returns human-readable violations (empty when sound).
  std::vector<std::string> Audit() const;

 private:
  struct Node {
    BoundingBox envelope;
    bool leaf = true;
    // Entry indices for leaves, node indices otherwise.
    std::vector<std::int32_t> children;
  };

  SpatialIndex() = default;

  IndexOptions options_;
  std::vector<IndexEntry> entries_;
  std::vector<Node> nodes_;
  std::vector<ObjectId> sorted_ids_;
  std::int32_t root_ = 0;
  int height_ = 0;
};

}  // namespace pathex

#endif  // PATHEX_SPATIAL_INDEX_H_

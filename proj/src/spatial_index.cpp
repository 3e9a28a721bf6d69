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

#include "pathex/spatial_index.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pathex/error.h"

namespace pathex {
namespace {

// Splits `count` items into ceil(count/max) groups of near-equal size.
// With at least two groups every group holds > max/2 items, which keeps
// STR-packed nodes above the minimum fill.
std::vector<std::size_t> GroupSizes(std::size_t count, std::size_t max) {
  const std::size_t groups = (count + max - 1) / max;
  std::vector<std::size_t> sizes(groups, count / groups);
  for (std::size_t i = 0; i < count % groups; ++i) ++sizes[i];
  return sizes;
}

// Twice the box center; integer so sorting is exact.
std::int64_t CenterX2(const BoundingBox& b) { return b.min_x + b.max_x; }
std::int64_t CenterY2(const BoundingBox& b) { return b.min_y + b.max_y; }

}  // namespace

SpatialIndex SpatialIndex::Build(const RegionSet& regions, IndexOptions options) {
  std::vector<IndexEntry> entries;
  entries.reserve(regions.size());
  for (const ObjectRecord& obj : regions.objects()) {
    entries.push_back({obj.object_id, obj.bbox});
  }
  return Build(std::move(entries), options);
}

SpatialIndex SpatialIndex::Build(std::vector<IndexEntry> entries,
                                 IndexOptions options) {
  if (entries.empty()) {
    throw Error(ErrorKind::kIndexBuild, "cannot index an empty region set");
  }
  if (options.max_entries < 2 || options.min_entries < 1 ||
      options.min_entries > options.max_entries / 2) {
    throw Error(ErrorKind::kIndexBuild, "invalid fanout options");
  }
  SpatialIndex index;
  index.options_ = options;
  index.entries_ = std::move(entries);
  for (const IndexEntry& e : index.entries_) {
    if (!e.box.valid()) {
      throw Error(ErrorKind::kIndexBuild,
                  "object " + std::to_string(e.object_id) + " has an empty box");
    }
    index.sorted_ids_.push_back(e.object_id);
  }
  std::sort(index.sorted_ids_.begin(), index.sorted_ids_.end());
  if (auto dup = std::adjacent_find(index.sorted_ids_.begin(), index.sorted_ids_.end());
      dup != index.sorted_ids_.end()) {
    throw Error(ErrorKind::kIndexBuild, "duplicate object id " + std::to_string(*dup));
  }

  const std::size_t max = static_cast<std::size_t>(options.max_entries);

  // One STR pass: pack `items` (indices into either entries_ or nodes_) into
  // parent nodes and return the parents' indices.
  auto pack_level = [&](std::vector<std::int32_t> items, bool leaf_level,
                        const std::function<const BoundingBox&(std::int32_t)>& box_of) {
    std::vector<std::int32_t> parents;
    const std::size_t n = items.size();
    const std::size_t node_count = (n + max - 1) / max;
    const auto slices = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(node_count))));
    auto by_x = [&](std::int32_t a, std::int32_t b) {
      const auto ka = CenterX2(box_of(a)), kb = CenterX2(box_of(b));
      return ka != kb ? ka < kb : CenterY2(box_of(a)) < CenterY2(box_of(b));
    };
    auto by_y = [&](std::int32_t a, std::int32_t b) {
      const auto ka = CenterY2(box_of(a)), kb = CenterY2(box_of(b));
      return ka != kb ? ka < kb : CenterX2(box_of(a)) < CenterX2(box_of(b));
    };
    std::stable_sort(items.begin(), items.end(), by_x);
    // Vertical slices of whole nodes, then runs along y inside each slice.
    const std::vector<std::size_t> slice_sizes =
        GroupSizes(n, std::max<std::size_t>(max, max * ((node_count + slices - 1) / slices)));
    std::size_t offset = 0;
    for (std::size_t slice : slice_sizes) {
      auto first = items.begin() + static_cast<std::ptrdiff_t>(offset);
      std::stable_sort(first, first + static_cast<std::ptrdiff_t>(slice), by_y);
      std::size_t run_offset = offset;
      for (std::size_t run : GroupSizes(slice, max)) {
        Node node;
        node.leaf = leaf_level;
        node.envelope = box_of(items[run_offset]);
        for (std::size_t k = run_offset; k < run_offset + run; ++k) {
          node.children.push_back(items[k]);
          node.envelope = BBoxUnion(node.envelope, box_of(items[k]));
        }
        index.nodes_.push_back(std::move(node));
        parents.push_back(static_cast<std::int32_t>(index.nodes_.size() - 1));
        run_offset += run;
      }
      offset += slice;
    }
    return parents;
  };

  std::vector<std::int32_t> level(index.entries_.size());
  for (std::size_t i = 0; i < level.size(); ++i) level[i] = static_cast<std::int32_t>(i);
  level = pack_level(std::move(level), true, [&](std::int32_t i) -> const BoundingBox& {
    return index.entries_[i].box;
  });
  index.height_ = 1;
  while (level.size() > 1) {
    level = pack_level(std::move(level), false, [&](std::int32_t i) -> const BoundingBox& {
      return index.nodes_[i].envelope;
    });
    ++index.height_;
  }
  index.root_ = level.front();
  return index;
}

std::vector<ObjectId> SpatialIndex::QueryWindow(const BoundingBox& window) const {
  std::vector<ObjectId> out;
  if (!window.valid()) return out;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (!BBoxIntersects(node.envelope, window)) continue;
    for (std::int32_t child : node.children) {
      if (node.leaf) {
        if (BBoxIntersects(entries_[child].box, window)) {
          out.push_back(entries_[child].object_id);
        }
      } else {
        stack.push_back(child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ObjectId> SpatialIndex::QueryPoint(std::int64_t x, std::int64_t y) const {
  return QueryWindow({x, y, x + 1, y + 1});
}

bool SpatialIndex::Contains(ObjectId id) const {
  return std::binary_search(sorted_ids_.begin(), sorted_ids_.end(), id);
}

IndexStats SpatialIndex::Stats() const {
  IndexStats stats;
  stats.height = height_;
  stats.node_count = nodes_.size();
  stats.entry_count = entries_.size();
  stats.leaf_count = static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.leaf; }));
  return stats;
}

std::vector<IndexEntry> SpatialIndex::LeafEntries() const {
  std::vector<IndexEntry> out;
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      if (node.leaf) {
        out.push_back(entries_[*it]);
      } else {
        stack.push_back(*it);
      }
    }
  }
  return out;
}

std::vector<std::string> SpatialIndex::Audit() const {
  std::vector<std::string> problems;
  std::size_t entries_seen = 0;
  std::size_t nodes_seen = 0;
  std::function<void(std::int32_t, int)> walk = [&](std::int32_t id, int depth) {
    const Node& node = nodes_[id];
    ++nodes_seen;
    const std::string tag = "node " + std::to_string(id);
    const auto fan = static_cast<int>(node.children.size());
    if (fan == 0 || fan > options_.max_entries) {
      problems.push_back(tag + ": fanout " + std::to_string(fan));
    }
    if (id != root_ && fan < options_.min_entries) {
      problems.push_back(tag + ": underfull (" + std::to_string(fan) + ")");
    }
    if (node.leaf && depth != height_) {
      problems.push_back(tag + ": leaf at depth " + std::to_string(depth));
    }
    BoundingBox cover{};
    bool first = true;
    for (std::int32_t child : node.children) {
      const BoundingBox& b = node.leaf ? entries_[child].box : nodes_[child].envelope;
      if (!node.envelope.Contains(b)) {
        problems.push_back(tag + ": child envelope escapes parent");
      }
      cover = first ? b : BBoxUnion(cover, b);
      first = false;
      if (node.leaf) {
        ++entries_seen;
      } else {
        walk(child, depth + 1);
      }
    }
    if (!first && cover != node.envelope) {
      problems.push_back(tag + ": envelope is not tight");
    }
  };
  walk(root_, 1);
  if (entries_seen != entries_.size()) {
    problems.push_back("entry count " + std::to_string(entries_seen) +
                       " != " + std::to_string(entries_.size()));
  }
  if (nodes_seen != nodes_.size()) {
    problems.push_back("unreachable nodes");
  }
  return problems;
}

}  // namespace pathex

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

#include "pathex/batch_plan.h"

#include <algorithm>
#include <map>

namespace pathex {

std::uint64_t SlabFootprint(std::int64_t bucket_edge, std::size_t depth) {
  const auto edge = static_cast<std::uint64_t>(bucket_edge);
  return edge * edge * depth * kBytesPerPixel * 2;
}

std::int64_t BucketEdgeFor(std::int64_t width, std::int64_t height) {
  const std::int64_t side = std::max(width, height);
  for (std::int64_t edge : kBucketEdges) {
    if (side <= edge) return edge;
  }
  return 0;
}

BatchPlan PlanBatches(const RegionSet& regions, const MemoryBudget& budget) {
  BatchPlan plan;
  std::map<std::int64_t, std::vector<ObjectId>> buckets;
  for (const ObjectRecord& obj : regions.objects()) {
    const std::int64_t edge = BucketEdgeFor(obj.bbox.width(), obj.bbox.height());
    if (edge == 0 || SlabFootprint(edge, 1) > budget.bytes()) {
      plan.overflow.push_back(obj.object_id);
    } else {
      buckets[edge].push_back(obj.object_id);
    }
  }
  for (auto& [edge, ids] : buckets) {
    const std::size_t depth =
        static_cast<std::size_t>(budget.bytes() / SlabFootprint(edge, 1));
    for (std::size_t start = 0; start < ids.size(); start += depth) {
      const std::size_t stop = std::min(ids.size(), start + depth);
      plan.slabs.push_back(
          {edge, std::vector<ObjectId>(ids.begin() + start, ids.begin() + stop)});
    }
  }
  return plan;
}

}  // namespace pathex

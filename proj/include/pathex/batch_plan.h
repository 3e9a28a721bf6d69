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

/// @file batch_plan.h
/// @brief Memory-budgeted grouping of objects into padded slabs.
///
/// Objects are bucketed by the longer side of their bounding box into
/// power-of-two edges {16, 32, 64, 128, 256}. Each bucket is cut into slabs
/// whose footprint (edge^2 x depth x 8 bytes x 2 planes) fits the budget.
/// Objects longer than 256 px, or whose single padded crop would exceed the
/// budget, are routed to the per-object overflow list. Kernel scratch
/// memory is outside the footprint model.

#ifndef PATHEX_BATCH_PLAN_H_
#define PATHEX_BATCH_PLAN_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pathex/memory_budget.h"
#include "pathex/region_model.h"

namespace pathex {

inline constexpr std::array<std::int64_t, 5> kBucketEdges{16, 32, 64, 128, 256};
inline constexpr std::uint64_t kBytesPerPixel = sizeof(double);

/// Bytes charged for `depth` padded planes of edge x edge (patch + mask).
std::uint64_t SlabFootprint(std::int64_t bucket_edge, std::size_t depth);

struct SlabPlan {
  std::int64_t bucket_edge = 0;
  std::vector<ObjectId> object_ids;  // ascending

  std::uint64_t footprint() const {
    return SlabFootprint(bucket_edge, object_ids.size());
  }
};

struct BatchPlan {
  std::vector<SlabPlan> slabs;    // ascending bucket edge, then first id
  std::vector<ObjectId> overflow;  // ascending
};

/// Smallest bucket edge holding a w x h box; 0 when none does.
std::int64_t BucketEdgeFor(std::int64_t width, std::int64_t height);

/// Deterministic in (regions, budget).
BatchPlan PlanBatches(const RegionSet& regions, const MemoryBudget& budget);

}  // namespace pathex

#endif  // PATHEX_BATCH_PLAN_H_

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

#include "pathex/extract.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathex/error.h"
#include "pathex/object_kernel.h"
#include "pathex/object_view.h"
#include "pathex/slab.h"

namespace pathex {

namespace {

std::size_t PositionOf(const RegionSet& regions, ObjectId id) {
  const ObjectRecord* obj = regions.Find(id);
  if (obj == nullptr) {
    throw Error(ErrorKind::kPlanCorrupt, "object " + std::to_string(id) + " is unknown");
  }
  return static_cast<std::size_t>(obj - regions.objects().data());
}

ObjectFeatures RunSingle(const ObjectRecord& obj, const SlideSource& slide) {
  IntensityPatch patch;
  try {
    patch = ReadPatch(slide, obj.bbox);
  } catch (const Error& e) {
    throw Error(e.kind(), "object " + std::to_string(obj.object_id) + ": " + e.what());
  }
  return ComputeObjectFeatures(MakeView(obj, patch), obj.object_id);
}

}  // namespace

FeatureTable ExtractAll(const RegionSet& regions, const SlideSource& slide,
                        const ExtractOptions& options, ExtractStats* stats) {
  std::vector<std::optional<ObjectFeatures>> results(regions.size());
  BatchPlan plan;
  if (options.mode == ExtractMode::kBatched) {
    plan = PlanBatches(regions, options.budget);
  } else {
    for (const ObjectRecord& obj : regions.objects()) plan.overflow.push_back(obj.object_id);
  }

  // Larger buckets first so the long units start early.
  std::vector<std::size_t> slab_order(plan.slabs.size());
  for (std::size_t i = 0; i < slab_order.size(); ++i) slab_order[i] = slab_order.size() - 1 - i;

  const std::size_t units = plan.slabs.size() + plan.overflow.size();
  ParallelFor(units, options.workers, [&](std::size_t unit) {
    if (unit < plan.slabs.size()) {
      const SlabPlan& entry = plan.slabs[slab_order[unit]];
      const Slab slab = EncodeSlab(entry, regions, slide);
      for (std::size_t slot = 0; slot < slab.depth(); ++slot) {
        results[PositionOf(regions, slab.id_map[slot])] =
            ComputeObjectFeatures(slab.View(slot), slab.id_map[slot]);
      }
    } else {
      const std::size_t pos = PositionOf(regions, plan.overflow[unit - plan.slabs.size()]);
      results[pos] = RunSingle(regions.objects()[pos], slide);
    }
  });

  FeatureTable table;
  table.rows.reserve(regions.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    ObjectFeatures& f = *results[i];
    f.row.class_label = regions.objects()[i].class_label;
    table.rows.push_back(std::move(f.row));
    if (f.diagnostic.flags != 0) table.diagnostics.push_back(f.diagnostic);
  }
  if (stats != nullptr) {
    stats->objects = regions.size();
    stats->slabs = plan.slabs.size();
    stats->overflow = plan.overflow.size();
  }
  return table;
}

}  // namespace pathex

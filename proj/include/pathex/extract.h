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

/// @file extract.h
/// @brief Drives the feature kernels over a whole region set.
///
/// Batched mode plans slabs under the memory budget, encodes each slab
/// from the slide and runs the kernels slot by slot on the padded planes;
/// overflow objects take the per-object path. Per-object mode is that same
/// path applied to every object. Work units run on a thread pool and rows
/// are assembled in object id order, so scheduling never changes output.

#ifndef PATHEX_EXTRACT_H_
#define PATHEX_EXTRACT_H_

#include <cstddef>

#include "pathex/batch_plan.h"
#include "pathex/feature_table.h"
#include "pathex/memory_budget.h"
#include "pathex/region_model.h"
#include "pathex/slide_source.h"
#include "pathex/thread_pool.h"

namespace pathex {

enum class ExtractMode { kBatched, kPerObject };

struct ExtractOptions {
  ExtractMode mode = ExtractMode::kBatched;
  MemoryBudget budget;
  int workers = DefaultWorkerCount();
};

struct ExtractStats {
  std::size_t objects = 0;
  std::size_t slabs = 0;
  std::size_t overflow = 0;
};

FeatureTable ExtractAll(const RegionSet& regions, const SlideSource& slide,
                        const ExtractOptions& options = {},
                        ExtractStats* stats = nullptr);

}  // namespace pathex

#endif  // PATHEX_EXTRACT_H_

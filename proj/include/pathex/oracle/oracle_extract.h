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

#ifndef PATHEX_ORACLE_ORACLE_EXTRACT_H_
#define PATHEX_ORACLE_ORACLE_EXTRACT_H_

#include <vector>

#include "pathex/feature_table.h"
#include "pathex/region_model.h"
#include "pathex/slide_source.h"

namespace pathex::oracle {

/// Linear scan with BBoxIntersects; ascending ids.
std::vector<ObjectId> OracleQuery(const RegionSet& regions, const BoundingBox& window);

/// Single-threaded per-object reference table.
FeatureTable OracleExtract(const RegionSet& regions, const SlideSource& slide);

}  // namespace pathex::oracle

#endif  // PATHEX_ORACLE_ORACLE_EXTRACT_H_

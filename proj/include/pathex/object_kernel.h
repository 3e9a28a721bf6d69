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

#ifndef PATHEX_OBJECT_KERNEL_H_
#define PATHEX_OBJECT_KERNEL_H_

#include "pathex/feature_table.h"
#include "pathex/object_view.h"

namespace pathex {

struct ObjectFeatures {
  FeatureRow row;  // class_label left empty
  ObjectDiagnostic diagnostic;
};

/// All 247 features of one object in manifest order.
ObjectFeatures ComputeObjectFeatures(const ObjectView& view, ObjectId id);

}  // namespace pathex

#endif  // PATHEX_OBJECT_KERNEL_H_

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

#include "pathex/object_view.h"

#include <string>

#include "pathex/error.h"

namespace pathex {

ObjectView MakeView(const ObjectRecord& object, const IntensityPatch& patch) {
  const ObjectMask& mask = object.mask;
  if (patch.width != mask.width() || patch.height != mask.height() ||
      patch.values.size() != mask.bits().size()) {
    throw Error(ErrorKind::kShape,
                "object " + std::to_string(object.object_id) + ": patch is " +
                    std::to_string(patch.width) + "x" + std::to_string(patch.height) +
                    ", mask is " + std::to_string(mask.width()) + "x" +
                    std::to_string(mask.height()));
  }
  ObjectView view;
  view.mask = mask.bits().data();
  view.values = patch.values.data();
  view.width = mask.width();
  view.height = mask.height();
  view.stride = mask.width();
  view.bbox = object.bbox;
  return view;
}

}  // namespace pathex

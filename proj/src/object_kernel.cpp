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

#include "pathex/object_kernel.h"

#include <algorithm>

#include "pathex/distribution_features.h"
#include "pathex/intensity_features.h"
#include "pathex/shape_features.h"
#include "pathex/texture_features.h"

namespace pathex {

ObjectFeatures ComputeObjectFeatures(const ObjectView& view, ObjectId id) {
  ObjectFeatures out;
  out.row.object_id = id;
  out.row.values.resize(kFeatureCount);
  auto& values = out.row.values;

  const ObjectGeometry geometry = MeasureGeometry(view);
  const ShapeVector shape = ShapeFeatures(view, geometry);
  const TextureResult texture = TextureFeatures(view);
  const IntensityVector intensity = IntensityFeatures(view, geometry.raw);
  const DistributionResult distribution = DistributionFeatures(view, geometry);

  std::copy(shape.begin(), shape.end(), values.begin() + kShapeOffset);
  std::copy(texture.values.begin(), texture.values.end(), values.begin() + kTextureOffset);
  std::copy(intensity.begin(), intensity.end(), values.begin() + kIntensityOffset);
  std::copy(distribution.values.begin(), distribution.values.end(),
            values.begin() + kDistributionOffset);
  out.row.center_x = shape[18];
  out.row.center_y = shape[19];

  out.diagnostic.object_id = id;
  out.diagnostic.degenerate_texture_blocks = texture.degenerate_blocks;
  if (texture.degenerate_blocks > 0) out.diagnostic.flags |= kDegenerateTexture;
  if (distribution.zero_intensity) out.diagnostic.flags |= kZeroIntensity;
  return out;
}

}  // namespace pathex

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

/// @file shape_features.h
/// @brief Size & Shape family: 30 features from the binary mask alone.
///
/// Geometry is measured on pixel centers in the view's local frame
/// (integer indices); slide placement comes from the view's bbox.

#ifndef PATHEX_SHAPE_FEATURES_H_
#define PATHEX_SHAPE_FEATURES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "pathex/manifest.h"
#include "pathex/object_view.h"

namespace pathex {

/// Exact raw moment sums up to order 3 over set-pixel local coordinates.
struct RawMoments {
  std::int64_t n = 0;
  std::int64_t sx = 0, sy = 0;
  std::int64_t sxx = 0, sxy = 0, syy = 0;
  std::int64_t sxxx = 0, sxxy = 0, sxyy = 0, syyy = 0;
};

RawMoments AccumulateMoments(const ObjectView& view);

struct CentralMoments {
  double m00 = 0;
  double cx = 0, cy = 0;  // local centroid
  double mu20 = 0, mu11 = 0, mu02 = 0;
  double mu30 = 0, mu21 = 0, mu12 = 0, mu03 = 0;
  // N * mu for the second order terms; exact integers held in doubles.
  double n_mu20 = 0, n_mu11 = 0, n_mu02 = 0;
};

/// Derived from integer arithmetic, so symmetric masks give exact zeros.
CentralMoments ComputeCentralMoments(const RawMoments& raw);

/// phi1..phi7 from eta_pq = mu_pq / m00^(1 + (p+q)/2); phi7 keeps its sign.
std::array<double, 7> HuMoments(const CentralMoments& c);

struct BoundaryStats {
  double perimeter = 0;
  std::int64_t euler_number = 0;
};

/// One pass of 2x2 windows: contour length through pixel centers (4*Area
/// for objects of at most 2 pixels) and the 8/4 connectivity Euler number.
BoundaryStats ScanBoundary(const ObjectView& view);
double Perimeter(const ObjectView& view);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Counter-clockwise hull of set-pixel centers without collinear vertices.
/// One point for a single pixel, two for collinear objects.
std::vector<LatticePoint> ConvexHull(const ObjectView& view);

/// Pixel centers inside or on the hull polygon.
std::int64_t HullLatticeCount(const std::vector<LatticePoint>& hull);

struct FeretDiameters {
  double max = 0;
  double min = 0;
};

/// Rotating calipers over the hull. Collinear hulls have min 0.
FeretDiameters Feret(const std::vector<LatticePoint>& hull);

/// Squared Euclidean distance from each window pixel to the nearest
/// non-object pixel (anything outside the window counts). Zero off-mask.
std::vector<std::int64_t> SquaredDistanceTransform(const ObjectView& view);

/// Everything several families need from one object.
struct ObjectGeometry {
  RawMoments raw;
  CentralMoments central;
  std::vector<std::int64_t> sq_edt;
};

ObjectGeometry MeasureGeometry(const ObjectView& view);

using ShapeVector = std::array<double, kShapeCount>;

ShapeVector ShapeFeatures(const ObjectView& view, const ObjectGeometry& geometry);
ShapeVector ShapeFeatures(const ObjectView& view);

}  // namespace pathex

#endif  // PATHEX_SHAPE_FEATURES_H_

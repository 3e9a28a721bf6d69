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

#include "pathex/intensity_features.h"

#include <algorithm>
#include <cmath>

#include "pathex/order_stats.h"

namespace pathex {

namespace {

struct Summary {
  double integrated = 0;
  double mean = 0;
  double std = 0;
  double min = 0;
  double max = 0;
};

Summary Summarize(const std::vector<double>& v) {
  Summary s;
  if (v.empty()) return s;
  s.min = *std::min_element(v.begin(), v.end());
  s.max = *std::max_element(v.begin(), v.end());
  for (double x : v) s.integrated += x;
  if (s.min == s.max) {
    s.mean = s.min;
    return s;
  }
  s.mean = s.integrated / static_cast<double>(v.size());
  double ss = 0;
  for (double x : v) ss += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(v.size()));
  return s;
}

}  // namespace

std::vector<std::uint8_t> EdgePixels(const ObjectView& view) {
  std::vector<std::uint8_t> edge(static_cast<std::size_t>(view.width * view.height), 0);
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      if (!view.in(x - 1, y) || !view.in(x + 1, y) || !view.in(x, y - 1) ||
          !view.in(x, y + 1)) {
        edge[y * view.width + x] = 1;
      }
    }
  }
  return edge;
}

IntensityVector IntensityFeatures(const ObjectView& view, const RawMoments& raw) {
  const std::vector<std::uint8_t> edge = EdgePixels(view);
  std::vector<double> values, edge_values;
  values.reserve(static_cast<std::size_t>(raw.n));
  double wx = 0, wy = 0;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const double v = view.value(x, y);
      values.push_back(v);
      wx += static_cast<double>(x) * v;
      wy += static_cast<double>(y) * v;
      if (edge[y * view.width + x]) edge_values.push_back(v);
    }
  }
  const Summary all = Summarize(values);
  const Summary rim = Summarize(edge_values);

  std::sort(values.begin(), values.end());
  const double median = QuantileSorted(values, 0.5);
  std::vector<double> deviations(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    deviations[i] = std::abs(values[i] - median);
  }
  std::sort(deviations.begin(), deviations.end());

  const auto n = static_cast<double>(raw.n);
  const double cx = static_cast<double>(raw.sx) / n;
  const double cy = static_cast<double>(raw.sy) / n;
  double mx = cx, my = cy;
  if (all.min != all.max && all.integrated > 0) {
    mx = wx / all.integrated;
    my = wy / all.integrated;
  }

  IntensityVector out{};
  out[0] = all.integrated;
  out[1] = all.mean;
  out[2] = all.std;
  out[3] = all.min;
  out[4] = all.max;
  out[5] = median;
  out[6] = QuantileSorted(deviations, 0.5);
  out[7] = QuantileSorted(values, 0.25);
  out[8] = QuantileSorted(values, 0.75);
  out[9] = std::sqrt((mx - cx) * (mx - cx) + (my - cy) * (my - cy));
  out[10] = rim.integrated;
  out[11] = rim.mean;
  out[12] = rim.std;
  out[13] = rim.min;
  out[14] = rim.max;
  out[15] = static_cast<double>(view.bbox.min_x) + mx;
  out[16] = static_cast<double>(view.bbox.min_y) + my;
  return out;
}

IntensityVector IntensityFeatures(const ObjectView& view) {
  return IntensityFeatures(view, AccumulateMoments(view));
}

}  // namespace pathex

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

#include "pathex/texture_features.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pathex {

namespace {

constexpr int kSumBins = 2 * kGrayLevels - 1;

double PLog2P(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

}  // namespace

std::vector<std::uint8_t> Quantize(const ObjectView& view) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      lo = std::min(lo, view.value(x, y));
      hi = std::max(hi, view.value(x, y));
    }
  }
  std::vector<std::uint8_t> levels(static_cast<std::size_t>(view.width * view.height), 0);
  if (!(hi > lo)) return levels;
  const double range = hi - lo;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const double scaled = (view.value(x, y) - lo) / range * kGrayLevels;
      levels[y * view.width + x] =
          static_cast<std::uint8_t>(std::min(kGrayLevels - 1, static_cast<int>(scaled)));
    }
  }
  return levels;
}

Offset TextureOffset(int scale, int angle_degrees) {
  switch (angle_degrees) {
    case 0: return {scale, 0};
    case 45: return {scale, -scale};
    case 90: return {0, -scale};
    default: return {-scale, -scale};
  }
}

Glcm ComputeGlcm(const ObjectView& view, const std::vector<std::uint8_t>& levels,
                 int scale, int angle_degrees) {
  const Offset off = TextureOffset(scale, angle_degrees);
  std::array<std::int64_t, kGrayLevels * kGrayLevels> counts{};
  Glcm g;
  const std::int64_t y0 = std::max<std::int64_t>(0, -off.dy);
  const std::int64_t y1 = std::min(view.height, view.height - off.dy);
  const std::int64_t x0 = std::max<std::int64_t>(0, -off.dx);
  const std::int64_t x1 = std::min(view.width, view.width - off.dx);
  for (std::int64_t y = y0; y < y1; ++y) {
    for (std::int64_t x = x0; x < x1; ++x) {
      if (!view.set(x, y) || !view.set(x + off.dx, y + off.dy)) continue;
      const int a = levels[y * view.width + x];
      const int b = levels[(y + off.dy) * view.width + x + off.dx];
      ++counts[a * kGrayLevels + b];
      ++counts[b * kGrayLevels + a];
      ++g.pair_count;
    }
  }
  if (g.pair_count == 0) return g;
  const auto total = static_cast<double>(2 * g.pair_count);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    g.p[i] = static_cast<double>(counts[i]) / total;
  }
  return g;
}

std::array<double, kHaralickCount> Haralick13(const Glcm& g) {
  std::array<double, kHaralickCount> h{};
  if (g.degenerate()) return h;
  constexpr int L = kGrayLevels;
  std::array<double, L> px{};
  std::array<double, kSumBins> psum{};
  std::array<double, L> pdiff{};
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const double p = g.at(i, j);
      px[i] += p;
      psum[i + j] += p;
      pdiff[std::abs(i - j)] += p;
    }
  }
  double mean = 0;
  for (int i = 0; i < L; ++i) mean += i * px[i];
  double var = 0;
  for (int i = 0; i < L; ++i) var += (i - mean) * (i - mean) * px[i];

  double asm_ = 0, contrast = 0, cov = 0, idm = 0, entropy = 0, hxy1 = 0, hxy2 = 0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const double p = g.at(i, j);
      const double pp = px[i] * px[j];
      asm_ += p * p;
      contrast += (i - j) * (i - j) * p;
      cov += (i - mean) * (j - mean) * p;
      idm += p / (1.0 + (i - j) * (i - j));
      entropy -= PLog2P(p);
      if (p > 0) hxy1 -= p * std::log2(pp);
      hxy2 -= PLog2P(pp);
    }
  }
  double sum_avg = 0, sum_entropy = 0;
  for (int k = 0; k < kSumBins; ++k) {
    sum_avg += k * psum[k];
    sum_entropy -= PLog2P(psum[k]);
  }
  double sum_var = 0;
  for (int k = 0; k < kSumBins; ++k) sum_var += (k - sum_avg) * (k - sum_avg) * psum[k];
  double diff_mean = 0, diff_entropy = 0;
  for (int k = 0; k < L; ++k) {
    diff_mean += k * pdiff[k];
    diff_entropy -= PLog2P(pdiff[k]);
  }
  double diff_var = 0;
  for (int k = 0; k < L; ++k) diff_var += (k - diff_mean) * (k - diff_mean) * pdiff[k];
  double hx = 0;
  for (int i = 0; i < L; ++i) hx -= PLog2P(px[i]);

  h[0] = asm_;
  h[1] = contrast;
  h[2] = var < 1e-15 ? 0.0 : cov / var;
  h[3] = var;
  h[4] = idm;
  h[5] = sum_avg;
  h[6] = sum_var;
  h[7] = sum_entropy;
  h[8] = entropy;
  h[9] = diff_var;
  h[10] = diff_entropy;
  h[11] = hx > 0 ? (entropy - hxy1) / hx : 0.0;
  double gap = hxy2 - entropy;
  if (std::abs(gap) < 1e-12 || gap < 0) gap = 0;
  h[12] = std::sqrt(1.0 - std::exp(-2.0 * gap));
  return h;
}

TextureResult TextureFeatures(const ObjectView& view) {
  TextureResult out;
  const std::vector<std::uint8_t> levels = Quantize(view);
  std::size_t k = 0;
  for (int scale : kTextureScales) {
    for (int angle : kTextureAngles) {
      const Glcm g = ComputeGlcm(view, levels, scale, angle);
      if (g.degenerate()) ++out.degenerate_blocks;
      const auto stats = Haralick13(g);
      std::copy(stats.begin(), stats.end(), out.values.begin() + k);
      k += kHaralickCount;
    }
  }
  return out;
}

}  // namespace pathex

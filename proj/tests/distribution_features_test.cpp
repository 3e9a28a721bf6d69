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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pathex/distribution_features.h"
#include "pathex/manifest.h"
#include "pathex/shape_features.h"
#include "test_support.h"

namespace pathex {
namespace {

using testing::DiskMask;
using testing::FilledMask;
using testing::OwnedView;
using testing::PatchFrom;

OwnedView Own(const ObjectMask& m, const IntensityPatch& p) { return testing::MakeOwnedView(m, p); }

struct Measured {
  ObjectGeometry geometry;
  RadialProfile profile;
  ZernikeSet zernike;
};

Measured Measure(const OwnedView& v) {
  Measured m;
  m.geometry = MeasureGeometry(v.view());
  m.profile = RadialDistribution(v.view(), m.geometry);
  m.zernike = ZernikeFeatures(v.view(), m.geometry.central);
  return m;
}

TEST(ZernikeIndices, ThirtyPairsNMajor) {
  const auto& idx = ZernikeIndices();
  EXPECT_EQ(idx[0], std::make_pair(0, 0));
  EXPECT_EQ(idx[1], std::make_pair(1, 1));
  EXPECT_EQ(idx[2], std::make_pair(2, 0));
  EXPECT_EQ(idx[3], std::make_pair(2, 2));
  EXPECT_EQ(idx[29], std::make_pair(9, 9));
  for (const auto& [n, m] : idx) {
    EXPECT_LE(m, n);
    EXPECT_EQ((n - m) % 2, 0);
  }
}

TEST(RadialCoordinate, DiskCenterAndBoundary) {
  const OwnedView v = Own(DiskMask(20), testing::ConstantPatch(41, 41, 0.5));
  const ObjectGeometry g = MeasureGeometry(v.view());
  const RadialCoordinates rc = RadialCoordinate(v.view(), g);
  EXPECT_EQ(rc.r[20 * 41 + 20], 0);
  EXPECT_EQ(rc.bin[20 * 41 + 20], 0);
  EXPECT_EQ(rc.bin[20 * 41 + 0], 11);
  EXPECT_GT(rc.r[20 * 41 + 0], 0.9);
  EXPECT_EQ(rc.bin[0], -1);
}

TEST(RadialCoordinate, DiskBinPopulationsGrow) {
  const OwnedView v = Own(DiskMask(50), testing::ConstantPatch(101, 101, 0.5));
  const RadialCoordinates rc = RadialCoordinate(v.view(), MeasureGeometry(v.view()));
  std::array<int, kRadialBins> counts{};
  for (int b : rc.bin) {
    if (b >= 0) counts[b]++;
  }
  for (int b = 1; b < kRadialBins; ++b) EXPECT_GT(counts[b], counts[b - 1]) << "bin " << b;
}

TEST(WedgeIndex, Quadrants) {
  std::array<int, 8> seen{};
  for (int k = 0; k < 8; ++k) {
    const double a = -std::numbers::pi + (k + 0.5) * std::numbers::pi / 4;
    const int w = WedgeIndex(std::cos(a), std::sin(a));
    ASSERT_GE(w, 0);
    ASSERT_LT(w, 8);
    seen[w]++;
  }
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(RadialDistribution, ConstantDisk) {
  const Measured m = Measure(Own(DiskMask(50), testing::ConstantPatch(101, 101, 0.6)));
  double sum = 0;
  for (int b = 0; b < kRadialBins; ++b) {
    sum += m.profile.frac_at_d[b];
    if (m.profile.frac_at_d[b] > 0) {
      EXPECT_NEAR(m.profile.mean_frac[b], 1, 1e-12);
    }
    EXPECT_GE(m.profile.radial_cv[b], 0);
  }
  EXPECT_NEAR(sum, 1, 1e-9);
  for (int b = 1; b < kRadialBins - 1; ++b) EXPECT_LT(m.profile.radial_cv[b], 0.05) << "bin " << b;
}

TEST(RadialDistribution, BrightCenterDecreases) {
  const double sigma = 50.0 / 4;
  const Measured m = Measure(Own(DiskMask(50), PatchFrom(101, 101, [&](auto x, auto y) {
    const double dx = static_cast<double>(x - 50), dy = static_cast<double>(y - 50);
    return std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
  })));
  const auto& f = m.profile.frac_at_d;
  const int peak = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
  for (int b = peak + 1; b < kRadialBins; ++b) EXPECT_LT(f[b], f[b - 1]) << "bin " << b;
}

TEST(RadialDistribution, ZeroIntensity) {
  const Measured m = Measure(Own(FilledMask(9, 9), testing::ConstantPatch(9, 9, 0)));
  EXPECT_TRUE(m.profile.zero_intensity);
  for (int b = 0; b < kRadialBins; ++b) {
    EXPECT_EQ(m.profile.frac_at_d[b], 0);
    EXPECT_EQ(m.profile.mean_frac[b], 0);
    EXPECT_EQ(m.profile.radial_cv[b], 0);
  }
}

TEST(RadialDistribution, FracSumsToOne) {
  testing::ForAllSeeds(60, 4000, [](std::mt19937_64& rng, int i) {
    const ObjectMask mask = testing::RandomBlob(rng, 2 + i % 25, 2 + i % 19, 0.5);
    const Measured m = Measure(Own(mask, testing::RandomPatch(rng, mask.width(), mask.height())));
    if (m.profile.zero_intensity) return;
    double sum = 0;
    for (double f : m.profile.frac_at_d) sum += f;
    EXPECT_NEAR(sum, 1, 1e-9);
    for (double cv : m.profile.radial_cv) EXPECT_GE(cv, 0);
  });
}

TEST(RadialDistribution, BinsPartitionMask) {
  testing::ForAllSeeds(40, 4100, [](std::mt19937_64& rng, int i) {
    const ObjectMask mask = testing::RandomBlob(rng, 3 + i % 20, 3 + i % 16, 0.5);
    const OwnedView v = Own(mask, testing::ConstantPatch(mask.width(), mask.height(), 1));
    const RadialCoordinates rc = RadialCoordinate(v.view(), MeasureGeometry(v.view()));
    for (std::size_t k = 0; k < rc.bin.size(); ++k) {
      if (mask.bits()[k]) {
        EXPECT_GE(rc.bin[k], 0);
        EXPECT_LT(rc.bin[k], kRadialBins);
        EXPECT_GE(rc.r[k], 0);
        EXPECT_LT(rc.r[k], 1);
      } else {
        EXPECT_EQ(rc.bin[k], -1);
      }
    }
  });
}

TEST(Zernike, UniformDisk) {
  const Measured m = Measure(Own(DiskMask(50), testing::ConstantPatch(101, 101, 0.7)));
  EXPECT_GT(m.zernike.magnitude[0], 0);
  for (std::size_t k = 1; k < kZernikeCount; ++k) EXPECT_LT(m.zernike.magnitude[k], 0.01) << k;
}

TEST(Zernike, SinglePixelIsZero) {
  const Measured m = Measure(Own(FilledMask(1, 1), testing::ConstantPatch(1, 1, 0.7)));
  for (std::size_t k = 0; k < kZernikeCount; ++k) {
    EXPECT_EQ(m.zernike.magnitude[k], 0);
    EXPECT_EQ(m.zernike.phase[k], 0);
  }
}

TEST(Zernike, PhaseRangeAndMZero) {
  testing::ForAllSeeds(40, 4200, [](std::mt19937_64& rng, int i) {
    const ObjectMask mask = testing::RandomBlob(rng, 5 + i % 20, 5 + i % 13, 0.6);
    const Measured m = Measure(Own(mask, testing::RandomPatch(rng, mask.width(), mask.height())));
    for (std::size_t k = 0; k < kZernikeCount; ++k) {
      EXPECT_GE(m.zernike.magnitude[k], 0);
      EXPECT_GT(m.zernike.phase[k], -std::numbers::pi);
      EXPECT_LE(m.zernike.phase[k], std::numbers::pi);
      if (ZernikeIndices()[k].second == 0) {
        EXPECT_EQ(m.zernike.phase[k], 0);
      }
    }
  });
}

template <typename T>
std::vector<T> RotateGrid(const std::vector<T>& v, std::int64_t w, std::int64_t h) {
  std::vector<T> out(v.size());
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) out[static_cast<std::size_t>(x * h + (h - 1 - y))] = v[y * w + x];
  }
  return out;
}

TEST(Zernike, RotationEquivariance) {
  testing::ForAllSeeds(20, 4300, [](std::mt19937_64& rng, int) {
    const std::int64_t w = 19, h = 14;
    const ObjectMask mask = testing::RandomBlob(rng, w, h, 0.6);
    const IntensityPatch patch = testing::RandomPatch(rng, w, h);
    const ObjectMask rmask(h, w, RotateGrid(mask.bits(), w, h));
    const IntensityPatch rpatch{h, w, RotateGrid(patch.values, w, h)};
    const Measured a = Measure(Own(mask, patch)), b = Measure(Own(rmask, rpatch));
    for (std::size_t k = 0; k < kZernikeCount; ++k) {
      EXPECT_NEAR(a.zernike.magnitude[k], b.zernike.magnitude[k], 1e-3);
      if (a.zernike.magnitude[k] < 1e-6 || ZernikeIndices()[k].second == 0) continue;
      const int mm = ZernikeIndices()[k].second;
      const double expected = a.zernike.phase[k] - mm * std::numbers::pi / 2;
      double diff = std::remainder(b.zernike.phase[k] - expected, 2 * std::numbers::pi);
      EXPECT_NEAR(diff, 0, 1e-6) << "term " << k;
    }
  });
}

TEST(DistributionFeatures, LayoutMatchesParts) {
  std::mt19937_64 rng(8);
  const ObjectMask mask = testing::RandomBlob(rng, 15, 15, 0.6);
  const OwnedView v = Own(mask, testing::RandomPatch(rng, 15, 15));
  const Measured m = Measure(v);
  const DistributionResult d = DistributionFeatures(v.view(), m.geometry);
  for (int b = 0; b < kRadialBins; ++b) {
    EXPECT_EQ(d.values[b], m.profile.frac_at_d[b]);
    EXPECT_EQ(d.values[12 + b], m.profile.mean_frac[b]);
    EXPECT_EQ(d.values[24 + b], m.profile.radial_cv[b]);
  }
  for (std::size_t k = 0; k < kZernikeCount; ++k) {
    EXPECT_EQ(d.values[36 + k], m.zernike.magnitude[k]);
    EXPECT_EQ(d.values[66 + k], m.zernike.phase[k]);
  }
}

}  // namespace
}  // namespace pathex

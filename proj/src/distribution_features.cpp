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

#include "pathex/distribution_features.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace pathex {

namespace {

constexpr int kMaxPower = kZernikeMaxDegree;

// Radial polynomial coefficients: R_nm(rho) = sum_k coeff[k] * rho^k.
struct RadialPolynomial {
  int n = 0;
  int m = 0;
  std::array<double, kMaxPower + 1> coeff{};
};

const std::array<RadialPolynomial, kZernikeCount>& RadialPolynomials() {
  static const auto table = [] {
    std::array<double, 2 * kMaxPower + 1> fact{};
    fact[0] = 1;
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<double>(i);
    std::array<RadialPolynomial, kZernikeCount> out{};
    for (std::size_t k = 0; k < kZernikeCount; ++k) {
      const auto [n, m] = ZernikeIndices()[k];
      out[k].n = n;
      out[k].m = m;
      for (int s = 0; s <= (n - m) / 2; ++s) {
        const double sign = s % 2 == 0 ? 1.0 : -1.0;
        out[k].coeff[n - 2 * s] =
            sign * fact[n - s] / (fact[s] * fact[(n + m) / 2 - s] * fact[(n - m) / 2 - s]);
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

int WedgeIndex(double dx, double dy) {
  const double t = (std::atan2(dy, dx) + std::numbers::pi) / (2 * std::numbers::pi);
  return static_cast<int>(std::floor(t * kRadialWedges)) % kRadialWedges;
}

RadialCoordinates RadialCoordinate(const ObjectView& view, const ObjectGeometry& geometry) {
  RadialCoordinates out;
  const auto size = static_cast<std::size_t>(view.width * view.height);
  out.r.assign(size, 0.0);
  out.bin.assign(size, -1);
  const double cx = geometry.central.cx;
  const double cy = geometry.central.cy;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const std::size_t i = static_cast<std::size_t>(y * view.width + x);
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      const double dc = std::sqrt(dx * dx + dy * dy);
      const double de = std::sqrt(static_cast<double>(geometry.sq_edt[i]));
      const double r = dc / (dc + de);
      out.r[i] = r;
      out.bin[i] = std::min(static_cast<int>(std::floor(r * kRadialBins)), kRadialBins - 1);
    }
  }
  return out;
}

RadialProfile RadialDistribution(const ObjectView& view, const ObjectGeometry& geometry) {
  RadialProfile out;
  const RadialCoordinates coords = RadialCoordinate(view, geometry);
  std::array<std::array<double, kRadialWedges>, kRadialBins> wedge{};
  std::array<double, kRadialBins> bin_sum{};
  std::array<std::int64_t, kRadialBins> bin_count{};
  double total = 0;
  const double cx = geometry.central.cx;
  const double cy = geometry.central.cy;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const int b = coords.bin[y * view.width + x];
      const double v = view.value(x, y);
      const int w = WedgeIndex(static_cast<double>(x) - cx, static_cast<double>(y) - cy);
      wedge[b][w] += v;
      bin_sum[b] += v;
      ++bin_count[b];
      total += v;
    }
  }
  if (!(total > 0)) {
    out.zero_intensity = true;
    return out;
  }
  const auto n = static_cast<double>(geometry.raw.n);
  for (int b = 0; b < kRadialBins; ++b) {
    if (bin_count[b] == 0) continue;
    out.frac_at_d[b] = bin_sum[b] / total;
    out.mean_frac[b] = out.frac_at_d[b] / (static_cast<double>(bin_count[b]) / n);
    double mean = 0;
    for (double s : wedge[b]) mean += s;
    mean /= kRadialWedges;
    if (mean > 0) {
      double ss = 0;
      for (double s : wedge[b]) ss += (s - mean) * (s - mean);
      out.radial_cv[b] = std::sqrt(ss / kRadialWedges) / mean;
    }
  }
  return out;
}

ZernikeSet ZernikeFeatures(const ObjectView& view, const CentralMoments& central) {
  ZernikeSet out;
  const double cx = central.cx;
  const double cy = central.cy;
  double max_dist = 0;
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      max_dist = std::max(max_dist, std::sqrt(dx * dx + dy * dy));
    }
  }
  if (max_dist == 0) return out;
  const double radius = max_dist + 1;
  const double da = 1.0 / (radius * radius);
  const auto& polys = RadialPolynomials();

  std::array<std::complex<double>, kZernikeCount> acc{};
  double total = 0;
  std::array<double, kMaxPower + 1> rho_pow{};
  std::array<std::complex<double>, kMaxPower + 1> u_pow{};
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      const double v = view.value(x, y);
      total += v;
      if (v == 0) continue;
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      const double dist = std::sqrt(dx * dx + dy * dy);
      const std::complex<double> u =
          dist > 0 ? std::complex<double>(dx / dist, -dy / dist) : std::complex<double>(1, 0);
      const double rho = dist / radius;
      rho_pow[0] = 1;
      u_pow[0] = 1;
      for (int k = 1; k <= kMaxPower; ++k) {
        rho_pow[k] = rho_pow[k - 1] * rho;
        u_pow[k] = u_pow[k - 1] * u;
      }
      for (std::size_t k = 0; k < kZernikeCount; ++k) {
        const RadialPolynomial& poly = polys[k];
        double radial = 0;
        for (int p = poly.m; p <= poly.n; p += 2) radial += poly.coeff[p] * rho_pow[p];
        acc[k] += (radial * v) * u_pow[poly.m];
      }
    }
  }
  if (!(total > 0)) return out;
  for (std::size_t k = 0; k < kZernikeCount; ++k) {
    const auto [n, m] = ZernikeIndices()[k];
    const std::complex<double> a = acc[k] * ((n + 1) / std::numbers::pi * da);
    const double mag = std::abs(a);
    out.magnitude[k] = mag / total;
    if (m == 0 || mag / (total * da) < 1e-9) continue;
    if (std::abs(a.imag()) <= 1e-10 * mag) {
      out.phase[k] = a.real() >= 0 ? 0.0 : std::numbers::pi;
    } else {
      out.phase[k] = std::atan2(a.imag(), a.real());
    }
  }
  return out;
}

DistributionResult DistributionFeatures(const ObjectView& view,
                                        const ObjectGeometry& geometry) {
  DistributionResult out;
  const RadialProfile radial = RadialDistribution(view, geometry);
  const ZernikeSet zernike = ZernikeFeatures(view, geometry.central);
  out.zero_intensity = radial.zero_intensity;
  auto it = out.values.begin();
  it = std::copy(radial.frac_at_d.begin(), radial.frac_at_d.end(), it);
  it = std::copy(radial.mean_frac.begin(), radial.mean_frac.end(), it);
  it = std::copy(radial.radial_cv.begin(), radial.radial_cv.end(), it);
  it = std::copy(zernike.magnitude.begin(), zernike.magnitude.end(), it);
  std::copy(zernike.phase.begin(), zernike.phase.end(), it);
  return out;
}

}  // namespace pathex

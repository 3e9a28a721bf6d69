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

#include "pathex/shape_features.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "pathex/order_stats.h"

namespace pathex {

namespace {

using Int128 = __int128;

double Cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<double>((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

std::int64_t CrossInt(const LatticePoint& o, const LatticePoint& a,
                      const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::int64_t Dist2(const LatticePoint& a, const LatticePoint& b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Lower envelope of parabolas over the finite samples of f (Felzenszwalb &
// Huttenlocher). Every line handed in has at least one finite sample.
void DistanceTransform1d(const std::vector<double>& f, std::vector<double>& d,
                         std::vector<std::int64_t>& v, std::vector<double>& z) {
  const auto n = static_cast<std::int64_t>(f.size());
  v.resize(f.size());
  z.resize(f.size() + 1);
  std::int64_t k = -1;
  for (std::int64_t q = 0; q < n; ++q) {
    if (!std::isfinite(f[q])) continue;
    const double fq = f[q] + static_cast<double>(q * q);
    double s = 0;
    while (k >= 0) {
      const std::int64_t p = v[k];
      s = (fq - (f[p] + static_cast<double>(p * p))) / static_cast<double>(2 * (q - p));
      if (s > z[k]) break;
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = k == 0 ? -std::numeric_limits<double>::infinity() : s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (std::int64_t q = 0; q < n; ++q) {
    while (z[k + 1] < static_cast<double>(q)) ++k;
    const auto dq = static_cast<double>(q - v[k]);
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

RawMoments AccumulateMoments(const ObjectView& view) {
  RawMoments m;
  for (std::int64_t y = 0; y < view.height; ++y) {
    std::int64_t row_n = 0, row_sx = 0, row_sxx = 0, row_sxxx = 0;
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      ++row_n;
      row_sx += x;
      row_sxx += x * x;
      row_sxxx += x * x * x;
    }
    if (row_n == 0) continue;
    m.n += row_n;
    m.sx += row_sx;
    m.sy += row_n * y;
    m.sxx += row_sxx;
    m.sxy += row_sx * y;
    m.syy += row_n * y * y;
    m.sxxx += row_sxxx;
    m.sxxy += row_sxx * y;
    m.sxyy += row_sx * y * y;
    m.syyy += row_n * y * y * y;
  }
  return m;
}

CentralMoments ComputeCentralMoments(const RawMoments& r) {
  CentralMoments c;
  const Int128 n = r.n;
  const Int128 sx = r.sx, sy = r.sy;
  const auto nd = static_cast<double>(r.n);
  const double n2 = nd * nd;
  c.m00 = nd;
  c.cx = static_cast<double>(r.sx) / nd;
  c.cy = static_cast<double>(r.sy) / nd;
  c.n_mu20 = static_cast<double>(n * r.sxx - sx * sx);
  c.n_mu11 = static_cast<double>(n * r.sxy - sx * sy);
  c.n_mu02 = static_cast<double>(n * r.syy - sy * sy);
  c.mu20 = c.n_mu20 / nd;
  c.mu11 = c.n_mu11 / nd;
  c.mu02 = c.n_mu02 / nd;
  c.mu30 = static_cast<double>(n * n * r.sxxx - 3 * n * sx * r.sxx + 2 * sx * sx * sx) / n2;
  c.mu03 = static_cast<double>(n * n * r.syyy - 3 * n * sy * r.syy + 2 * sy * sy * sy) / n2;
  c.mu21 = static_cast<double>(n * n * r.sxxy - 2 * n * sx * r.sxy - n * sy * r.sxx +
                               2 * sx * sx * sy) / n2;
  c.mu12 = static_cast<double>(n * n * r.sxyy - 2 * n * sy * r.sxy - n * sx * r.syy +
                               2 * sy * sy * sx) / n2;
  return c;
}

std::array<double, 7> HuMoments(const CentralMoments& c) {
  const double s2 = c.m00 * c.m00;
  const double s3 = std::pow(c.m00, 2.5);
  const double n20 = c.mu20 / s2, n11 = c.mu11 / s2, n02 = c.mu02 / s2;
  const double n30 = c.mu30 / s3, n21 = c.mu21 / s3, n12 = c.mu12 / s3,
               n03 = c.mu03 / s3;
  const double a = n30 - 3 * n12;
  const double b = 3 * n21 - n03;
  const double p = n30 + n12;
  const double q = n21 + n03;
  std::array<double, 7> hu{};
  hu[0] = n20 + n02;
  hu[1] = (n20 - n02) * (n20 - n02) + 4 * n11 * n11;
  hu[2] = a * a + b * b;
  hu[3] = p * p + q * q;
  hu[4] = a * p * (p * p - 3 * q * q) + b * q * (3 * p * p - q * q);
  hu[5] = (n20 - n02) * (p * p - q * q) + 4 * n11 * p * q;
  hu[6] = b * p * (p * p - 3 * q * q) - a * q * (3 * p * p - q * q);
  return hu;
}

BoundaryStats ScanBoundary(const ObjectView& view) {
  std::int64_t q1 = 0, q3 = 0, qd = 0, adjacent = 0, area = 0;
  for (std::int64_t y = -1; y < view.height; ++y) {
    for (std::int64_t x = -1; x < view.width; ++x) {
      const bool a = view.in(x, y), b = view.in(x + 1, y);
      const bool c = view.in(x, y + 1), d = view.in(x + 1, y + 1);
      switch (a + b + c + d) {
        case 1: ++q1; break;
        case 2:
          if ((a && d) || (b && c)) ++qd; else ++adjacent;
          break;
        case 3: ++q3; break;
        default: break;
      }
      area += d;
    }
  }
  BoundaryStats out;
  out.euler_number = (q1 - q3 - 2 * qd) / 4;
  if (area <= 2) {
    out.perimeter = 4.0 * static_cast<double>(area);
  } else {
    out.perimeter = static_cast<double>(adjacent) +
                    static_cast<double>(2 * qd + q3) * std::numbers::sqrt2;
  }
  return out;
}

double Perimeter(const ObjectView& view) { return ScanBoundary(view).perimeter; }

std::vector<LatticePoint> ConvexHull(const ObjectView& view) {
  std::vector<LatticePoint> pts;
  for (std::int64_t y = 0; y < view.height; ++y) {
    std::int64_t lo = -1, hi = -1;
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (!view.set(x, y)) continue;
      if (lo < 0) lo = x;
      hi = x;
    }
    if (lo < 0) continue;
    pts.push_back({lo, y});
    if (hi != lo) pts.push_back({hi, y});
  }
  std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  if (pts.size() <= 1) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && CrossInt(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && CrossInt(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::int64_t HullLatticeCount(const std::vector<LatticePoint>& hull) {
  if (hull.empty()) return 0;
  std::int64_t twice_area = 0;
  std::int64_t boundary = 0;
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const LatticePoint& a = hull[i];
    const LatticePoint& b = hull[(i + 1) % k];
    twice_area += a.x * b.y - b.x * a.y;
    boundary += std::gcd(b.x - a.x, b.y - a.y);
  }
  if (k == 2) boundary /= 2;  // the segment was walked there and back
  twice_area = std::abs(twice_area);
  if (k == 2) return boundary + 1;
  return (twice_area + boundary) / 2 + 1;
}

FeretDiameters Feret(const std::vector<LatticePoint>& hull) {
  FeretDiameters out;
  const std::size_t k = hull.size();
  if (k < 2) return out;
  if (k == 2) {
    out.max = std::sqrt(static_cast<double>(Dist2(hull[0], hull[1])));
    return out;
  }
  std::int64_t best = 0;
  double width = std::numeric_limits<double>::infinity();
  std::size_t j = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ni = (i + 1) % k;
    while (Cross(hull[i], hull[ni], hull[(j + 1) % k]) >
           Cross(hull[i], hull[ni], hull[j])) {
      j = (j + 1) % k;
    }
    const std::size_t nj = (j + 1) % k;
    best = std::max({best, Dist2(hull[i], hull[j]), Dist2(hull[ni], hull[j]),
                     Dist2(hull[i], hull[nj]), Dist2(hull[ni], hull[nj])});
    const double edge = std::sqrt(static_cast<double>(Dist2(hull[i], hull[ni])));
    width = std::min(width, static_cast<double>(CrossInt(hull[i], hull[ni], hull[j])) / edge);
  }
  out.max = std::sqrt(static_cast<double>(best));
  out.min = width;
  return out;
}

std::vector<std::int64_t> SquaredDistanceTransform(const ObjectView& view) {
  const std::int64_t pw = view.width + 2;
  const std::int64_t ph = view.height + 2;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> grid(static_cast<std::size_t>(pw * ph), 0.0);
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (view.set(x, y)) grid[(y + 1) * pw + x + 1] = inf;
    }
  }
  std::vector<double> f, d;
  std::vector<std::int64_t> v;
  std::vector<double> z;
  f.resize(static_cast<std::size_t>(ph));
  d.resize(static_cast<std::size_t>(ph));
  for (std::int64_t x = 1; x < pw - 1; ++x) {
    for (std::int64_t y = 0; y < ph; ++y) f[y] = grid[y * pw + x];
    DistanceTransform1d(f, d, v, z);
    for (std::int64_t y = 0; y < ph; ++y) grid[y * pw + x] = d[y];
  }
  f.resize(static_cast<std::size_t>(pw));
  d.resize(static_cast<std::size_t>(pw));
  std::vector<std::int64_t> out(static_cast<std::size_t>(view.width * view.height), 0);
  for (std::int64_t y = 1; y < ph - 1; ++y) {
    for (std::int64_t x = 0; x < pw; ++x) f[x] = grid[y * pw + x];
    DistanceTransform1d(f, d, v, z);
    for (std::int64_t x = 1; x < pw - 1; ++x) {
      if (view.set(x - 1, y - 1)) {
        out[(y - 1) * view.width + x - 1] = static_cast<std::int64_t>(d[x]);
      }
    }
  }
  return out;
}

ObjectGeometry MeasureGeometry(const ObjectView& view) {
  ObjectGeometry g;
  g.raw = AccumulateMoments(view);
  g.central = ComputeCentralMoments(g.raw);
  g.sq_edt = SquaredDistanceTransform(view);
  return g;
}

ShapeVector ShapeFeatures(const ObjectView& view, const ObjectGeometry& geometry) {
  const CentralMoments& c = geometry.central;
  const double area = c.m00;
  const BoundaryStats boundary = ScanBoundary(view);
  const std::vector<LatticePoint> hull = ConvexHull(view);
  const auto convex_area = static_cast<double>(HullLatticeCount(hull));
  const FeretDiameters feret = Feret(hull);

  const double a = c.mu20 / area + 1.0 / 12.0;
  const double b = c.mu11 / area;
  const double cc = c.mu02 / area + 1.0 / 12.0;
  const double half_sum = (a + cc) / 2;
  const double root = std::sqrt((a - cc) * (a - cc) / 4 + b * b);
  const double major = half_sum + root;
  const double minor = std::max(0.0, half_sum - root);

  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(area));
  for (std::int64_t y = 0; y < view.height; ++y) {
    for (std::int64_t x = 0; x < view.width; ++x) {
      if (view.set(x, y)) {
        radii.push_back(std::sqrt(static_cast<double>(geometry.sq_edt[y * view.width + x])));
      }
    }
  }
  double radius_sum = 0;
  for (double r : radii) radius_sum += r;
  std::sort(radii.begin(), radii.end());

  const double perimeter = boundary.perimeter;
  const double four_pi_area = 4 * std::numbers::pi * area;
  const std::array<double, 7> hu = HuMoments(c);

  ShapeVector s{};
  s[0] = area;
  s[1] = perimeter;
  s[2] = convex_area;
  s[3] = area / convex_area;
  s[4] = area / static_cast<double>(view.width * view.height);
  s[5] = std::sqrt(2 * root / (half_sum + root));
  s[6] = 0.5 * std::atan2(2 * c.n_mu11, c.n_mu20 - c.n_mu02) * 180.0 / std::numbers::pi;
  s[7] = 4 * std::sqrt(major);
  s[8] = 4 * std::sqrt(minor);
  s[9] = four_pi_area / (perimeter * perimeter);
  s[10] = perimeter * perimeter / four_pi_area;
  s[11] = feret.max;
  s[12] = feret.min;
  s[13] = static_cast<double>(boundary.euler_number);
  s[14] = static_cast<double>(view.bbox.min_x);
  s[15] = static_cast<double>(view.bbox.min_y);
  s[16] = static_cast<double>(view.bbox.max_x);
  s[17] = static_cast<double>(view.bbox.max_y);
  s[18] = static_cast<double>(view.bbox.min_x) + c.cx;
  s[19] = static_cast<double>(view.bbox.min_y) + c.cy;
  s[20] = radius_sum / area;
  s[21] = QuantileSorted(radii, 0.5);
  s[22] = radii.back();
  std::copy(hu.begin(), hu.end(), s.begin() + 23);
  return s;
}

ShapeVector ShapeFeatures(const ObjectView& view) {
  return ShapeFeatures(view, MeasureGeometry(view));
}

}  // namespace pathex

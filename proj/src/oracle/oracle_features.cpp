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

#include "pathex/oracle/oracle_features.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "pathex/error.h"
#include "pathex/manifest.h"

namespace pathex::oracle {

namespace {

using Int128 = __int128;

struct Pixel {
  std::int64_t x;
  std::int64_t y;
};

// Mask copied into a grid with a one-pixel background frame.
struct Framed {
  std::int64_t w;  // framed width
  std::int64_t h;
  std::vector<int> f;
  int& at(std::int64_t x, std::int64_t y) { return f[y * w + x]; }
  int get(std::int64_t x, std::int64_t y) const { return f[y * w + x]; }
};

Framed Frame(const ObjectMask& mask) {
  Framed g{mask.width() + 2, mask.height() + 2, {}};
  g.f.assign(static_cast<std::size_t>(g.w * g.h), 0);
  for (std::int64_t y = 0; y < mask.height(); ++y) {
    for (std::int64_t x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y)) g.at(x + 1, y + 1) = 1;
    }
  }
  return g;
}

std::vector<Pixel> MaskPixels(const ObjectMask& mask) {
  std::vector<Pixel> out;
  for (std::int64_t y = 0; y < mask.height(); ++y) {
    for (std::int64_t x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

bool Inside(const ObjectMask& mask, std::int64_t x, std::int64_t y) {
  return x >= 0 && y >= 0 && x < mask.width() && y < mask.height() && mask.at(x, y);
}

std::int64_t FloodCount(Framed& g, int target, bool eight) {
  std::int64_t count = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> stack;
  for (std::int64_t y = 0; y < g.h; ++y) {
    for (std::int64_t x = 0; x < g.w; ++x) {
      if (g.get(x, y) != target) continue;
      ++count;
      g.at(x, y) = -1;
      stack.push_back({x, y});
      while (!stack.empty()) {
        auto [cx, cy] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (!eight && dx != 0 && dy != 0) continue;
            const std::int64_t nx = cx + dx, ny = cy + dy;
            if (nx < 0 || ny < 0 || nx >= g.w || ny >= g.h) continue;
            if (g.get(nx, ny) != target) continue;
            g.at(nx, ny) = -1;
            stack.push_back({nx, ny});
          }
        }
      }
    }
  }
  return count;
}

std::int64_t CrossOf(const Pixel& o, const Pixel& a, const Pixel& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::int64_t SqDist(const Pixel& a, const Pixel& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

std::vector<Pixel> BoundaryPixels(const ObjectMask& mask) {
  std::vector<Pixel> out;
  for (const Pixel& p : MaskPixels(mask)) {
    if (!Inside(mask, p.x - 1, p.y) || !Inside(mask, p.x + 1, p.y) ||
        !Inside(mask, p.x, p.y - 1) || !Inside(mask, p.x, p.y + 1)) {
      out.push_back(p);
    }
  }
  return out;
}

// Gift wrapping; collinear points resolve to the farthest one.
std::vector<Pixel> GiftWrap(const std::vector<Pixel>& pts) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x < pts[start].x || (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) {
      start = i;
    }
  }
  std::vector<Pixel> hull;
  bool all_same = std::all_of(pts.begin(), pts.end(), [&](const Pixel& p) {
    return p.x == pts[start].x && p.y == pts[start].y;
  });
  if (all_same) return {pts[start]};
  Pixel p = pts[start];
  do {
    hull.push_back(p);
    Pixel q = p;
    for (const Pixel& r : pts) {
      if (r.x == p.x && r.y == p.y) continue;
      if (q.x == p.x && q.y == p.y) {
        q = r;
        continue;
      }
      const std::int64_t cr = CrossOf(p, q, r);
      if (cr < 0 || (cr == 0 && SqDist(p, r) > SqDist(p, q))) q = r;
    }
    p = q;
  } while (!(p.x == pts[start].x && p.y == pts[start].y));
  return hull;
}

std::int64_t PointsInHull(const std::vector<Pixel>& hull, const ObjectMask& mask) {
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < mask.height(); ++y) {
    for (std::int64_t x = 0; x < mask.width(); ++x) {
      const Pixel t{x, y};
      bool inside = true;
      if (hull.size() == 1) {
        inside = t.x == hull[0].x && t.y == hull[0].y;
      } else if (hull.size() == 2) {
        inside = CrossOf(hull[0], hull[1], t) == 0 &&
                 t.x >= std::min(hull[0].x, hull[1].x) && t.x <= std::max(hull[0].x, hull[1].x) &&
                 t.y >= std::min(hull[0].y, hull[1].y) && t.y <= std::max(hull[0].y, hull[1].y);
      } else {
        for (std::size_t i = 0; i < hull.size() && inside; ++i) {
          inside = CrossOf(hull[i], hull[(i + 1) % hull.size()], t) >= 0;
        }
      }
      if (inside) ++count;
    }
  }
  return count;
}

double Quantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(v.size() - 1);
  const double base = std::floor(pos);
  const auto i = static_cast<std::size_t>(base);
  if (i + 1 >= v.size()) return v[v.size() - 1];
  return v[i] + (pos - base) * (v[i + 1] - v[i]);
}

struct Stats {
  double sum = 0, mean = 0, sd = 0, lo = 0, hi = 0;
};

Stats Describe(const std::vector<double>& v) {
  Stats s;
  if (v.empty()) return s;
  s.lo = v[0];
  s.hi = v[0];
  for (double x : v) {
    s.sum += x;
    s.lo = std::min(s.lo, x);
    s.hi = std::max(s.hi, x);
  }
  if (s.lo == s.hi) {
    s.mean = s.lo;
    return s;
  }
  s.mean = s.sum / static_cast<double>(v.size());
  double acc = 0;
  for (double x : v) acc += (x - s.mean) * (x - s.mean);
  s.sd = std::sqrt(acc / static_cast<double>(v.size()));
  return s;
}

double Factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double RadialZernike(int n, int m, double rho) {
  double sum = 0;
  for (int s = 0; s <= (n - m) / 2; ++s) {
    const double term = Factorial(n - s) /
                        (Factorial(s) * Factorial((n + m) / 2 - s) * Factorial((n - m) / 2 - s));
    sum += (s % 2 == 0 ? term : -term) * std::pow(rho, n - 2 * s);
  }
  return sum;
}

double Entropy(const std::vector<double>& p) {
  double h = 0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

std::array<double, kHaralickCount> HaralickOf(const std::vector<std::vector<double>>& P) {
  const int L = kGrayLevels;
  std::vector<double> px(L, 0.0), py(L, 0.0), psum(2 * L - 1, 0.0), pdiff(L, 0.0);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      px[i] += P[i][j];
      py[j] += P[i][j];
      psum[i + j] += P[i][j];
      pdiff[i > j ? i - j : j - i] += P[i][j];
    }
  }
  double ux = 0, uy = 0;
  for (int i = 0; i < L; ++i) {
    ux += i * px[i];
    uy += i * py[i];
  }
  double vx = 0, vy = 0;
  for (int i = 0; i < L; ++i) {
    vx += (i - ux) * (i - ux) * px[i];
    vy += (i - uy) * (i - uy) * py[i];
  }
  std::array<double, kHaralickCount> f{};
  std::vector<double> flat, indep;
  double cov = 0, hxy1 = 0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const double p = P[i][j];
      f[0] += p * p;
      f[1] += static_cast<double>((i - j) * (i - j)) * p;
      cov += (i - ux) * (j - uy) * p;
      f[4] += p / (1.0 + (i - j) * (i - j));
      flat.push_back(p);
      indep.push_back(px[i] * py[j]);
      if (p > 0) hxy1 -= p * std::log2(px[i] * py[j]);
    }
  }
  f[2] = (vx < 1e-15 || vy < 1e-15) ? 0.0 : cov / std::sqrt(vx * vy);
  f[3] = vx;
  for (int k = 0; k < 2 * L - 1; ++k) f[5] += k * psum[k];
  for (int k = 0; k < 2 * L - 1; ++k) f[6] += (k - f[5]) * (k - f[5]) * psum[k];
  f[7] = Entropy(psum);
  f[8] = Entropy(flat);
  double dmean = 0;
  for (int k = 0; k < L; ++k) dmean += k * pdiff[k];
  for (int k = 0; k < L; ++k) f[9] += (k - dmean) * (k - dmean) * pdiff[k];
  f[10] = Entropy(pdiff);
  const double hx = Entropy(px), hy = Entropy(py);
  const double hmax = std::max(hx, hy);
  f[11] = hmax > 0 ? (f[8] - hxy1) / hmax : 0.0;
  double d = Entropy(indep) - f[8];
  if (std::abs(d) < 1e-12 || d < 0) d = 0;
  f[12] = std::sqrt(1.0 - std::exp(-2.0 * d));
  return f;
}

}  // namespace

double OraclePerimeter(const ObjectMask& mask) {
  const auto pixels = MaskPixels(mask);
  if (pixels.size() <= 2) return 4.0 * static_cast<double>(pixels.size());
  Framed g = Frame(mask);
  static constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
  static constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};
  auto dir_of = [](std::int64_t dx, std::int64_t dy) {
    for (int d = 0; d < 8; ++d) {
      if (kDx[d] == dx && kDy[d] == dy) return d;
    }
    return -1;
  };
  double length = 0;
  int nbd = 1;
  for (std::int64_t y = 1; y < g.h - 1; ++y) {
    for (std::int64_t x = 1; x < g.w - 1; ++x) {
      const int v = g.get(x, y);
      const bool outer = v == 1 && g.get(x - 1, y) == 0;
      const bool hole = !outer && v >= 1 && g.get(x + 1, y) == 0;
      if (!outer && !hole) continue;
      ++nbd;
      std::int64_t x2 = outer ? x - 1 : x + 1, y2 = y;
      const int d0 = dir_of(x2 - x, y2 - y);
      int found = -1;
      for (int k = 0; k < 8; ++k) {
        const int d = (d0 - k + 8) % 8;
        if (g.get(x + kDx[d], y + kDy[d]) != 0) {
          found = d;
          break;
        }
      }
      if (found < 0) {
        g.at(x, y) = -nbd;
        continue;
      }
      const std::int64_t x1 = x + kDx[found], y1 = y + kDy[found];
      x2 = x1;
      y2 = y1;
      std::int64_t x3 = x, y3 = y;
      for (;;) {
        const int from = dir_of(x2 - x3, y2 - y3);
        bool east_zero = false;
        std::int64_t x4 = x3, y4 = y3;
        for (int k = 1; k <= 8; ++k) {
          const int d = (from + k) % 8;
          const std::int64_t nx = x3 + kDx[d], ny = y3 + kDy[d];
          if (g.get(nx, ny) != 0) {
            x4 = nx;
            y4 = ny;
            break;
          }
          if (d == 0) east_zero = true;
        }
        if (east_zero) {
          g.at(x3, y3) = -nbd;
        } else if (g.get(x3, y3) == 1) {
          g.at(x3, y3) = nbd;
        }
        length += (x4 != x3 && y4 != y3) ? std::numbers::sqrt2 : 1.0;
        if (x4 == x && y4 == y && x3 == x1 && y3 == y1) break;
        x2 = x3;
        y2 = y3;
        x3 = x4;
        y3 = y4;
      }
    }
  }
  return length;
}

std::int64_t OracleEulerNumber(const ObjectMask& mask) {
  Framed fg = Frame(mask);
  const std::int64_t components = FloodCount(fg, 1, true);
  Framed bg = Frame(mask);
  const std::int64_t background = FloodCount(bg, 0, false);
  return components - (background - 1);
}

std::vector<std::int64_t> OracleSquaredDistances(const ObjectMask& mask) {
  std::vector<Pixel> sites;
  for (std::int64_t y = -1; y <= mask.height(); ++y) {
    for (std::int64_t x = -1; x <= mask.width(); ++x) {
      if (Inside(mask, x, y)) continue;
      if (Inside(mask, x - 1, y) || Inside(mask, x + 1, y) || Inside(mask, x, y - 1) ||
          Inside(mask, x, y + 1)) {
        sites.push_back({x, y});
      }
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(mask.width() * mask.height()), 0);
  for (const Pixel& p : MaskPixels(mask)) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const Pixel& s : sites) best = std::min(best, SqDist(p, s));
    out[p.y * mask.width() + p.x] = best;
  }
  return out;
}

OracleResult OracleFeatures(const IntensityPatch& patch, const ObjectMask& mask,
                            const BoundingBox& bbox) {
  if (patch.width != mask.width() || patch.height != mask.height() ||
      mask.width() != bbox.width() || mask.height() != bbox.height()) {
    throw Error(ErrorKind::kInvalidArgument, "oracle: patch, mask and bbox disagree");
  }
  const std::vector<Pixel> pixels = MaskPixels(mask);
  if (pixels.empty()) throw Error(ErrorKind::kInvalidArgument, "oracle: empty mask");

  OracleResult result;
  std::vector<double>& out = result.values;
  out.assign(kFeatureCount, 0.0);
  const auto n = static_cast<std::int64_t>(pixels.size());
  const double nd = static_cast<double>(n);

  // Moments through D = N*x - Sx, so every sum stays an exact integer.
  std::int64_t sx = 0, sy = 0;
  for (const Pixel& p : pixels) {
    sx += p.x;
    sy += p.y;
  }
  Int128 d20 = 0, d11 = 0, d02 = 0, d30 = 0, d21 = 0, d12 = 0, d03 = 0;
  for (const Pixel& p : pixels) {
    const Int128 dx = Int128(n) * p.x - sx;
    const Int128 dy = Int128(n) * p.y - sy;
    d20 += dx * dx;
    d11 += dx * dy;
    d02 += dy * dy;
    d30 += dx * dx * dx;
    d21 += dx * dx * dy;
    d12 += dx * dy * dy;
    d03 += dy * dy * dy;
  }
  const double n2 = nd * nd, n3 = n2 * nd;
  const double mu20 = static_cast<double>(d20) / n2;
  const double mu11 = static_cast<double>(d11) / n2;
  const double mu02 = static_cast<double>(d02) / n2;
  const double mu30 = static_cast<double>(d30) / n3;
  const double mu21 = static_cast<double>(d21) / n3;
  const double mu12 = static_cast<double>(d12) / n3;
  const double mu03 = static_cast<double>(d03) / n3;
  const double cx = static_cast<double>(sx) / nd;
  const double cy = static_cast<double>(sy) / nd;

  // Size & shape.
  const double perimeter = OraclePerimeter(mask);
  const std::vector<Pixel> boundary = BoundaryPixels(mask);
  const std::vector<Pixel> hull = GiftWrap(boundary);
  const auto convex = static_cast<double>(PointsInHull(hull, mask));
  std::int64_t diameter2 = 0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    for (std::size_t j = i + 1; j < boundary.size(); ++j) {
      diameter2 = std::max(diameter2, SqDist(boundary[i], boundary[j]));
    }
  }
  double min_feret = 0;
  if (hull.size() >= 3) {
    min_feret = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Pixel& a = hull[i];
      const Pixel& b = hull[(i + 1) % hull.size()];
      std::int64_t far = 0;
      for (const Pixel& v : hull) far = std::max(far, CrossOf(a, b, v));
      min_feret = std::min(min_feret, static_cast<double>(far) /
                                          std::sqrt(static_cast<double>(SqDist(a, b))));
    }
  }
  const double sxx = mu20 / nd + 1.0 / 12.0;
  const double syy = mu02 / nd + 1.0 / 12.0;
  const double sxy = mu11 / nd;
  const double disc = std::sqrt((sxx - syy) * (sxx - syy) / 4 + sxy * sxy);
  const double l1 = (sxx + syy) / 2 + disc;
  const double l2 = std::max(0.0, (sxx + syy) / 2 - disc);

  const std::vector<std::int64_t> sq = OracleSquaredDistances(mask);
  std::vector<double> radii;
  for (const Pixel& p : pixels) radii.push_back(std::sqrt(static_cast<double>(sq[p.y * mask.width() + p.x])));
  double rsum = 0, rmax = 0;
  for (double r : radii) {
    rsum += r;
    rmax = std::max(rmax, r);
  }

  const double e2 = nd * nd, e3 = std::pow(nd, 2.5);
  const double h20 = mu20 / e2, h11 = mu11 / e2, h02 = mu02 / e2;
  const double h30 = mu30 / e3, h21 = mu21 / e3, h12 = mu12 / e3, h03 = mu03 / e3;
  std::array<double, 7> hu{};
  hu[0] = h20 + h02;
  hu[1] = std::pow(h20 - h02, 2) + 4 * h11 * h11;
  hu[2] = std::pow(h30 - 3 * h12, 2) + std::pow(3 * h21 - h03, 2);
  hu[3] = std::pow(h30 + h12, 2) + std::pow(h21 + h03, 2);
  hu[4] = (h30 - 3 * h12) * (h30 + h12) *
              (std::pow(h30 + h12, 2) - 3 * std::pow(h21 + h03, 2)) +
          (3 * h21 - h03) * (h21 + h03) *
              (3 * std::pow(h30 + h12, 2) - std::pow(h21 + h03, 2));
  hu[5] = (h20 - h02) * (std::pow(h30 + h12, 2) - std::pow(h21 + h03, 2)) +
          4 * h11 * (h30 + h12) * (h21 + h03);
  hu[6] = (3 * h21 - h03) * (h30 + h12) *
              (std::pow(h30 + h12, 2) - 3 * std::pow(h21 + h03, 2)) -
          (h30 - 3 * h12) * (h21 + h03) *
              (3 * std::pow(h30 + h12, 2) - std::pow(h21 + h03, 2));

  const double n_mu20 = static_cast<double>(d20 / n);
  const double n_mu11 = static_cast<double>(d11 / n);
  const double n_mu02 = static_cast<double>(d02 / n);

  std::size_t k = kShapeOffset;
  out[k++] = nd;
  out[k++] = perimeter;
  out[k++] = convex;
  out[k++] = nd / convex;
  out[k++] = nd / static_cast<double>(bbox.width() * bbox.height());
  out[k++] = std::sqrt(1.0 - (l2 / l1));
  out[k++] = std::atan2(2 * n_mu11, n_mu20 - n_mu02) / 2 * (180.0 / std::numbers::pi);
  out[k++] = 4 * std::sqrt(l1);
  out[k++] = 4 * std::sqrt(l2);
  out[k++] = 4 * std::numbers::pi * nd / (perimeter * perimeter);
  out[k++] = perimeter * perimeter / (4 * std::numbers::pi * nd);
  out[k++] = std::sqrt(static_cast<double>(diameter2));
  out[k++] = min_feret;
  out[k++] = static_cast<double>(OracleEulerNumber(mask));
  out[k++] = static_cast<double>(bbox.min_x);
  out[k++] = static_cast<double>(bbox.min_y);
  out[k++] = static_cast<double>(bbox.max_x);
  out[k++] = static_cast<double>(bbox.max_y);
  out[k++] = static_cast<double>(bbox.min_x) + cx;
  out[k++] = static_cast<double>(bbox.min_y) + cy;
  out[k++] = rsum / nd;
  out[k++] = Quantile(radii, 0.5);
  out[k++] = rmax;
  for (double h : hu) out[k++] = h;

  // Texture.
  std::vector<double> vals;
  for (const Pixel& p : pixels) vals.push_back(patch.at(p.x, p.y));
  const Stats all = Describe(vals);
  std::vector<int> level(static_cast<std::size_t>(mask.width() * mask.height()), 0);
  if (all.hi > all.lo) {
    for (const Pixel& p : pixels) {
      const double t = (patch.at(p.x, p.y) - all.lo) / (all.hi - all.lo) * kGrayLevels;
      level[p.y * mask.width() + p.x] = std::min(kGrayLevels - 1, static_cast<int>(std::floor(t)));
    }
  }
  k = kTextureOffset;
  for (int scale : kTextureScales) {
    for (int angle : kTextureAngles) {
      const double rad = angle * std::numbers::pi / 180.0;
      const std::int64_t ox = scale * std::lround(std::cos(rad));
      const std::int64_t oy = -scale * std::lround(std::sin(rad));
      std::vector<std::vector<double>> P(kGrayLevels, std::vector<double>(kGrayLevels, 0.0));
      double pairs = 0;
      for (const Pixel& p : pixels) {
        if (!Inside(mask, p.x + ox, p.y + oy)) continue;
        const int a = level[p.y * mask.width() + p.x];
        const int b = level[(p.y + oy) * mask.width() + p.x + ox];
        P[a][b] += 1;
        P[b][a] += 1;
        pairs += 2;
      }
      if (pairs == 0) {
        ++result.degenerate_texture_blocks;
        k += kHaralickCount;
        continue;
      }
      for (auto& row : P) {
        for (double& v : row) v /= pairs;
      }
      for (double v : HaralickOf(P)) out[k++] = v;
    }
  }

  // Intensity.
  std::vector<double> edge_vals;
  double wx = 0, wy = 0;
  for (const Pixel& p : pixels) {
    const double v = patch.at(p.x, p.y);
    wx += static_cast<double>(p.x) * v;
    wy += static_cast<double>(p.y) * v;
    if (!Inside(mask, p.x - 1, p.y) || !Inside(mask, p.x + 1, p.y) ||
        !Inside(mask, p.x, p.y - 1) || !Inside(mask, p.x, p.y + 1)) {
      edge_vals.push_back(v);
    }
  }
  const Stats edge = Describe(edge_vals);
  const double median = Quantile(vals, 0.5);
  std::vector<double> dev;
  for (double v : vals) dev.push_back(std::abs(v - median));
  double mx = cx, my = cy;
  if (all.hi != all.lo && all.sum > 0) {
    mx = wx / all.sum;
    my = wy / all.sum;
  }
  k = kIntensityOffset;
  out[k++] = all.sum;
  out[k++] = all.mean;
  out[k++] = all.sd;
  out[k++] = all.lo;
  out[k++] = all.hi;
  out[k++] = median;
  out[k++] = Quantile(dev, 0.5);
  out[k++] = Quantile(vals, 0.25);
  out[k++] = Quantile(vals, 0.75);
  out[k++] = std::hypot(mx - cx, my - cy);
  out[k++] = edge.sum;
  out[k++] = edge.mean;
  out[k++] = edge.sd;
  out[k++] = edge.lo;
  out[k++] = edge.hi;
  out[k++] = static_cast<double>(bbox.min_x) + mx;
  out[k++] = static_cast<double>(bbox.min_y) + my;

  // Radial distribution.
  std::array<double, kRadialBins> bin_i{};
  std::array<double, kRadialBins> bin_n{};
  std::array<std::array<double, kRadialWedges>, kRadialBins> wedge_i{};
  double total = 0;
  double max_dist = 0;
  for (const Pixel& p : pixels) {
    const double dx = static_cast<double>(p.x) - cx;
    const double dy = static_cast<double>(p.y) - cy;
    const double dc = std::sqrt(dx * dx + dy * dy);
    const double de = std::sqrt(static_cast<double>(sq[p.y * mask.width() + p.x]));
    const double r = dc / (dc + de);
    const int b = std::min(static_cast<int>(std::floor(r * kRadialBins)), kRadialBins - 1);
    const double t = (std::atan2(dy, dx) + std::numbers::pi) / (2 * std::numbers::pi);
    const int w = static_cast<int>(std::floor(t * kRadialWedges)) % kRadialWedges;
    const double v = patch.at(p.x, p.y);
    bin_i[b] += v;
    bin_n[b] += 1;
    wedge_i[b][w] += v;
    total += v;
    max_dist = std::max(max_dist, dc);
  }
  k = kDistributionOffset;
  if (total > 0) {
    for (int b = 0; b < kRadialBins; ++b) {
      if (bin_n[b] == 0) continue;
      const double frac = bin_i[b] / total;
      out[k + b] = frac;
      out[k + kRadialBins + b] = frac / (bin_n[b] / nd);
      double m = 0;
      for (double s : wedge_i[b]) m += s / kRadialWedges;
      if (m > 0) {
        double var = 0;
        for (double s : wedge_i[b]) var += (s - m) * (s - m) / kRadialWedges;
        out[k + 2 * kRadialBins + b] = std::sqrt(var) / m;
      }
    }
  } else {
    result.zero_intensity = true;
  }

  // Zernike.
  k = kDistributionOffset + 3 * kRadialBins;
  if (max_dist > 0 && total > 0) {
    const double radius = max_dist + 1;
    const double da = 1.0 / (radius * radius);
    for (std::size_t z = 0; z < kZernikeCount; ++z) {
      const auto [zn, zm] = ZernikeIndices()[z];
      std::complex<double> a = 0;
      for (const Pixel& p : pixels) {
        const double dx = static_cast<double>(p.x) - cx;
        const double dy = static_cast<double>(p.y) - cy;
        const double dist = std::sqrt(dx * dx + dy * dy);
        const double theta = dist > 0 ? std::atan2(dy, dx) : 0.0;
        const double radial = RadialZernike(zn, zm, dist / radius);
        a += radial * patch.at(p.x, p.y) * std::polar(1.0, -zm * theta);
      }
      a *= (zn + 1) / std::numbers::pi * da;
      const double mag = std::abs(a);
      out[k + z] = mag / total;
      double phase = 0;
      if (zm != 0 && mag / (total * da) >= 1e-9) {
        if (std::abs(a.imag()) <= 1e-10 * mag) {
          phase = a.real() >= 0 ? 0.0 : std::numbers::pi;
        } else {
          phase = std::arg(a);
        }
      }
      out[k + kZernikeCount + z] = phase;
    }
  }
  return result;
}

}  // namespace pathex::oracle

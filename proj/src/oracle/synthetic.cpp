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

#include "pathex/oracle/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "pathex/error.h"

namespace pathex::oracle {

namespace {

using Json = nlohmann::json;

// std distributions differ between standard libraries; these do not.
std::int64_t UniformInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

double UniformReal(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

struct Canvas {
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::vector<std::uint8_t> bits;
  bool get(std::int64_t x, std::int64_t y) const {
    return x >= 0 && y >= 0 && x < w && y < h && bits[y * w + x] != 0;
  }
  void set(std::int64_t x, std::int64_t y) { bits[y * w + x] = 1; }
};

Canvas Blank(std::int64_t w, std::int64_t h) {
  return {w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w * h), 0)};
}

template <typename Inside>
Canvas Paint(std::int64_t edge, Inside inside) {
  Canvas c = Blank(edge, edge);
  for (std::int64_t y = 0; y < edge; ++y) {
    for (std::int64_t x = 0; x < edge; ++x) {
      if (inside(x + 0.5, y + 0.5)) c.set(x, y);
    }
  }
  return c;
}

Canvas RenderShape(SyntheticShape shape, std::int64_t size, std::mt19937_64& rng) {
  const double mid = static_cast<double>(size) / 2;
  switch (shape) {
    case SyntheticShape::kPixel: {
      Canvas c = Blank(1, 1);
      c.set(0, 0);
      return c;
    }
    case SyntheticShape::kLine: {
      const bool vertical = UniformInt(rng, 0, 1) == 1;
      Canvas c = vertical ? Blank(1, size) : Blank(size, 1);
      std::fill(c.bits.begin(), c.bits.end(), 1);
      return c;
    }
    case SyntheticShape::kRectangle: {
      const std::int64_t w = UniformInt(rng, std::max<std::int64_t>(1, size / 3), size);
      const std::int64_t h = UniformInt(rng, std::max<std::int64_t>(1, size / 3), size);
      Canvas c = Blank(w, h);
      std::fill(c.bits.begin(), c.bits.end(), 1);
      return c;
    }
    case SyntheticShape::kEllipse: {
      const double a = std::max(1.5, mid - 0.25);
      const double b = std::max(1.5, a * UniformReal(rng, 0.35, 1.0));
      const double t = UniformReal(rng, 0.0, std::numbers::pi);
      const double ct = std::cos(t), st = std::sin(t);
      return Paint(size, [&](double x, double y) {
        const double dx = x - mid, dy = y - mid;
        const double u = dx * ct + dy * st, v = -dx * st + dy * ct;
        return (u * u) / (a * a) + (v * v) / (b * b) <= 1.0;
      });
    }
    case SyntheticShape::kRing: {
      const double outer = std::max(2.0, mid - 0.25);
      const double inner = std::max(1.0, outer * UniformReal(rng, 0.3, 0.6));
      return Paint(size, [&](double x, double y) {
        const double d2 = (x - mid) * (x - mid) + (y - mid) * (y - mid);
        return d2 <= outer * outer && d2 > inner * inner;
      });
    }
    case SyntheticShape::kBlob: {
      const auto lobes = UniformInt(rng, 3, 5);
      std::vector<std::array<double, 3>> disks;
      const double base = std::max(1.5, mid * 0.5);
      disks.push_back({mid, mid, base});
      for (std::int64_t i = 1; i < lobes; ++i) {
        const double r = UniformReal(rng, base * 0.5, base);
        const double ang = UniformReal(rng, 0.0, 2 * std::numbers::pi);
        const double reach = std::max(0.0, mid - r - 0.25);
        const double off = UniformReal(rng, 0.0, std::min(reach, base + r * 0.5));
        disks.push_back({mid + off * std::cos(ang), mid + off * std::sin(ang), r});
      }
      return Paint(size, [&](double x, double y) {
        for (const auto& [cx, cy, r] : disks) {
          if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) return true;
        }
        return false;
      });
    }
  }
  return Blank(1, 1);
}

// Fills one pixel of every diagonal-only 2x2 contact until none remain.
void FillDiagonalContacts(Canvas& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t y = 0; y + 1 < c.h; ++y) {
      for (std::int64_t x = 0; x + 1 < c.w; ++x) {
        const bool a = c.get(x, y), b = c.get(x + 1, y);
        const bool l = c.get(x, y + 1), d = c.get(x + 1, y + 1);
        if (a && d && !b && !l) {
          c.set(x + 1, y);
          changed = true;
        } else if (b && l && !a && !d) {
          c.set(x, y);
          changed = true;
        }
      }
    }
  }
}

// Keeps the largest 4-connected component (earliest in scan order on ties).
void KeepLargestComponent(Canvas& c) {
  std::vector<int> label(c.bits.size(), 0);
  std::vector<std::int64_t> sizes{0};
  std::vector<std::int64_t> stack;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(c.bits.size()); ++i) {
    if (!c.bits[i] || label[i]) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    label[i] = id;
    stack.push_back(i);
    while (!stack.empty()) {
      const std::int64_t p = stack.back();
      stack.pop_back();
      ++sizes[id];
      const std::int64_t x = p % c.w, y = p / c.w;
      const std::array<std::pair<std::int64_t, std::int64_t>, 4> nbrs{
          {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}}};
      for (auto [nx, ny] : nbrs) {
        if (!c.get(nx, ny)) continue;
        const std::int64_t q = ny * c.w + nx;
        if (label[q]) continue;
        label[q] = id;
        stack.push_back(q);
      }
    }
  }
  int keep = 1;
  for (int id = 2; id < static_cast<int>(sizes.size()); ++id) {
    if (sizes[id] > sizes[keep]) keep = id;
  }
  for (std::size_t i = 0; i < c.bits.size(); ++i) c.bits[i] = label[i] == keep ? 1 : 0;
}

Canvas Crop(const Canvas& c) {
  std::int64_t x0 = c.w, y0 = c.h, x1 = -1, y1 = -1;
  for (std::int64_t y = 0; y < c.h; ++y) {
    for (std::int64_t x = 0; x < c.w; ++x) {
      if (!c.get(x, y)) continue;
      x0 = std::min(x0, x);
      y0 = std::min(y0, y);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
  }
  Canvas out = Blank(x1 - x0 + 1, y1 - y0 + 1);
  for (std::int64_t y = y0; y <= y1; ++y) {
    for (std::int64_t x = x0; x <= x1; ++x) {
      if (c.get(x, y)) out.set(x - x0, y - y0);
    }
  }
  return out;
}

// Closed crack-boundary loops in slide coordinates; the loop enclosing
// the largest area comes first.
std::vector<std::vector<std::array<std::int64_t, 2>>> CrackLoops(const Canvas& c,
                                                                 std::int64_t ox,
                                                                 std::int64_t oy) {
  using Vertex = std::pair<std::int64_t, std::int64_t>;
  std::map<Vertex, Vertex> next;
  for (std::int64_t y = 0; y < c.h; ++y) {
    for (std::int64_t x = 0; x < c.w; ++x) {
      if (!c.get(x, y)) continue;
      if (!c.get(x, y - 1)) next[{x, y}] = {x + 1, y};
      if (!c.get(x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
      if (!c.get(x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
      if (!c.get(x - 1, y)) next[{x, y + 1}] = {x, y};
    }
  }
  std::vector<std::vector<std::array<std::int64_t, 2>>> loops;
  std::vector<double> areas;
  while (!next.empty()) {
    const Vertex start = next.begin()->first;
    std::vector<Vertex> walk;
    Vertex v = start;
    do {
      walk.push_back(v);
      auto it = next.find(v);
      const Vertex to = it->second;
      next.erase(it);
      v = to;
    } while (v != start);
    std::vector<std::array<std::int64_t, 2>> ring;
    const std::size_t k = walk.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex& prev = walk[(i + k - 1) % k];
      const Vertex& cur = walk[i];
      const Vertex& nxt = walk[(i + 1) % k];
      const bool straight = (prev.first == cur.first && cur.first == nxt.first) ||
                            (prev.second == cur.second && cur.second == nxt.second);
      if (!straight) ring.push_back({cur.first + ox, cur.second + oy});
    }
    ring.push_back(ring.front());
    double twice = 0;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
      twice += static_cast<double>(ring[i][0] * ring[i + 1][1] - ring[i + 1][0] * ring[i][1]);
    }
    loops.push_back(std::move(ring));
    areas.push_back(std::abs(twice));
  }
  const auto outer = static_cast<std::size_t>(
      std::max_element(areas.begin(), areas.end()) - areas.begin());
  std::swap(loops[0], loops[outer]);
  return loops;
}

struct Placed {
  BoundingBox box;
  Canvas mask;
};

std::uint32_t Clamp8(double v) {
  return static_cast<std::uint32_t>(std::clamp(std::lround(v), 0L, 255L));
}

void PaintIntensity(IntensityModel model, const Placed& obj, std::mt19937_64& rng,
                    Raster& slide) {
  const std::int64_t w = obj.box.width(), h = obj.box.height();
  const double lo = static_cast<double>(UniformInt(rng, 10, 120));
  const double hi = static_cast<double>(UniformInt(rng, 130, 245));
  double constant = static_cast<double>(UniformInt(rng, 20, 220));
  if (UniformInt(rng, 0, 7) == 0) constant = 0;
  const double angle = UniformReal(rng, 0.0, 2 * std::numbers::pi);
  const double ux = std::cos(angle), uy = std::sin(angle);
  const double sigma = std::max(1.0, static_cast<double>(std::max(w, h)) / 4);
  double pmin = 0, pmax = 0;
  for (const auto& [cx, cy] : {std::pair{0.0, 0.0}, std::pair{1.0, 0.0}, std::pair{0.0, 1.0},
                              std::pair{1.0, 1.0}}) {
    const double p = cx * static_cast<double>(w - 1) * ux + cy * static_cast<double>(h - 1) * uy;
    pmin = std::min(pmin, p);
    pmax = std::max(pmax, p);
  }
  for (std::int64_t y = 0; y < h; ++y) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (!obj.mask.get(x, y)) continue;
      double v = constant;
      switch (model) {
        case IntensityModel::kConstant: break;
        case IntensityModel::kRamp: {
          const double p = static_cast<double>(x) * ux + static_cast<double>(y) * uy;
          const double t = pmax > pmin ? (p - pmin) / (pmax - pmin) : 0.0;
          v = lo + (hi - lo) * t;
          break;
        }
        case IntensityModel::kGaussian: {
          const double dx = static_cast<double>(x) - static_cast<double>(w - 1) / 2;
          const double dy = static_cast<double>(y) - static_cast<double>(h - 1) / 2;
          v = lo + (hi - lo) * std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
          break;
        }
        case IntensityModel::kNoise:
          v = static_cast<double>(UniformInt(rng, static_cast<std::int64_t>(lo),
                                             static_cast<std::int64_t>(hi)));
          break;
      }
      slide.samples[static_cast<std::size_t>((obj.box.min_y + y) * slide.width +
                                             obj.box.min_x + x)] = Clamp8(v);
    }
  }
}

constexpr std::array<const char*, 4> kClassNames{"nucleus", "tubule", "glomerulus", "artery"};

template <typename T>
std::vector<T> ParseList(std::string_view text, std::initializer_list<std::pair<const char*, T>> names,
                         const char* what) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    bool found = false;
    for (const auto& [name, value] : names) {
      if (item == name) {
        out.push_back(value);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("unknown ") + what + " '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<SyntheticShape> ParseShapeList(std::string_view text) {
  return ParseList<SyntheticShape>(text,
                                   {{"ellipse", SyntheticShape::kEllipse},
                                    {"rectangle", SyntheticShape::kRectangle},
                                    {"blob", SyntheticShape::kBlob},
                                    {"ring", SyntheticShape::kRing},
                                    {"line", SyntheticShape::kLine},
                                    {"pixel", SyntheticShape::kPixel}},
                                   "shape");
}

std::vector<IntensityModel> ParseIntensityList(std::string_view text) {
  return ParseList<IntensityModel>(text,
                                   {{"constant", IntensityModel::kConstant},
                                    {"ramp", IntensityModel::kRamp},
                                    {"gaussian", IntensityModel::kGaussian},
                                    {"noise", IntensityModel::kNoise}},
                                   "intensity model");
}

SyntheticSlide GenerateSyntheticSlide(const SyntheticSpec& spec) {
  if (spec.slide_width <= 0 || spec.slide_height <= 0 || spec.min_size < 1 ||
      spec.max_size < spec.min_size || spec.shapes.empty() || spec.intensities.empty() ||
      spec.gap < 0 || spec.background > 255) {
    throw Error(ErrorKind::kInvalidArgument, "invalid synthetic slide spec");
  }
  std::mt19937_64 rng(spec.seed);
  const std::int64_t W = spec.slide_width, H = spec.slide_height;
  std::vector<std::uint8_t> occupied(static_cast<std::size_t>(W * H), 0);

  SyntheticSlide out;
  out.slide.width = W;
  out.slide.height = H;
  out.slide.channels = 1;
  out.slide.bits_per_sample = 8;
  out.slide.samples.assign(static_cast<std::size_t>(W * H), spec.background);
  out.labels = {W, H, std::vector<std::uint32_t>(static_cast<std::size_t>(W * H), 0)};
  out.geojson = {{"type", "FeatureCollection"}, {"features", Json::array()}};

  std::vector<ObjectRecord> records;
  for (std::size_t i = 0; i < spec.object_count; ++i) {
    const SyntheticShape shape = spec.shapes[i % spec.shapes.size()];
    const IntensityModel model =
        spec.intensities[(i / spec.shapes.size()) % spec.intensities.size()];
    const std::int64_t size = UniformInt(rng, spec.min_size, spec.max_size);
    Canvas mask = RenderShape(shape, size, rng);
    // Tiny rings and ellipses can miss every pixel centre.
    if (std::find(mask.bits.begin(), mask.bits.end(), 1) == mask.bits.end()) {
      mask.set(mask.w / 2, mask.h / 2);
    }
    FillDiagonalContacts(mask);
    KeepLargestComponent(mask);
    mask = Crop(mask);
    const ObjectId id = static_cast<ObjectId>(i + 1);

    bool placed = false;
    BoundingBox box;
    if (mask.w <= W && mask.h <= H) {
      for (int attempt = 0; attempt < 4000 && !placed; ++attempt) {
        const std::int64_t x = UniformInt(rng, 0, W - mask.w);
        const std::int64_t y = UniformInt(rng, 0, H - mask.h);
        bool free = true;
        for (std::int64_t yy = std::max<std::int64_t>(0, y - spec.gap);
             free && yy < std::min(H, y + mask.h + spec.gap); ++yy) {
          for (std::int64_t xx = std::max<std::int64_t>(0, x - spec.gap);
               xx < std::min(W, x + mask.w + spec.gap); ++xx) {
            if (occupied[yy * W + xx]) {
              free = false;
              break;
            }
          }
        }
        if (free) {
          placed = true;
          box = {x, y, x + mask.w, y + mask.h};
        }
      }
    }
    if (!placed) {
      throw Error(ErrorKind::kPacking, "cannot place object " + std::to_string(id) + " of " +
                                           std::to_string(spec.object_count) + " on a " +
                                           std::to_string(W) + "x" + std::to_string(H) +
                                           " slide");
    }
    for (std::int64_t y = box.min_y; y < box.max_y; ++y) {
      for (std::int64_t x = box.min_x; x < box.max_x; ++x) {
        occupied[y * W + x] = 1;
        if (mask.get(x - box.min_x, y - box.min_y)) {
          out.labels.labels[y * W + x] = static_cast<std::uint32_t>(id);
        }
      }
    }
    const Placed obj{box, mask};
    PaintIntensity(model, obj, rng, out.slide);

    const std::string cls = kClassNames[UniformInt(rng, 0, kClassNames.size() - 1)];
    out.classes[id] = cls;
    Json rings = Json::array();
    for (const auto& loop : CrackLoops(mask, box.min_x, box.min_y)) {
      Json ring = Json::array();
      for (const auto& p : loop) ring.push_back({p[0], p[1]});
      rings.push_back(std::move(ring));
    }
    out.geojson["features"].push_back(
        {{"type", "Feature"},
         {"id", std::to_string(id)},
         {"geometry", {{"type", "Polygon"}, {"coordinates", std::move(rings)}}},
         {"properties",
          {{"objectType", "annotation"}, {"classification", {{"name", cls}}}}}});
    records.push_back({id, cls, box, ObjectMask(mask.w, mask.h, mask.bits)});
  }
  out.regions = RegionSet(W, H, std::move(records), "synthetic:" + std::to_string(spec.seed));
  return out;
}

void WriteSyntheticSlide(const SyntheticSlide& slide, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteTiff(dir / kSlideFile, slide.slide);
  Raster labels;
  labels.width = slide.labels.width;
  labels.height = slide.labels.height;
  labels.channels = 1;
  labels.bits_per_sample = 32;
  labels.samples = slide.labels.labels;
  WriteTiff(dir / kLabelFile, labels);
  auto write_text = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + (dir / name).string());
    out << text << '\n';
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + (dir / name).string());
  };
  write_text(kGeoJsonFile, slide.geojson.dump());
  Json classes = Json::object();
  for (const auto& [id, cls] : slide.classes) classes[std::to_string(id)] = cls;
  write_text(kClassFile, classes.dump());
}

}  // namespace pathex::oracle

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

#include "pathex/slide_source.h"

#include <tiffio.h>

#include <cstring>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathex/error.h"

namespace pathex {
namespace {

double MaxSample(int bits) {
  return static_cast<double>((std::uint64_t{1} << bits) - 1);
}

std::string BoxText(const BoundingBox& b) {
  return "(" + std::to_string(b.min_x) + "," + std::to_string(b.min_y) + "," +
         std::to_string(b.max_x) + "," + std::to_string(b.max_y) + ")";
}

// Windowed reader over a TIFF file. Decoded tiles (or strips) are kept in a
// small LRU cache; all libtiff calls are serialized by one mutex.
class TiffSlide final : public SlideSource {
 public:
  explicit TiffSlide(const std::filesystem::path& path) : path_(path) {
    TIFFSetWarningHandler(nullptr);
    TIFFSetErrorHandler(nullptr);
    tif_ = TIFFOpen(path.c_str(), "r");
    if (!tif_) throw Error(ErrorKind::kIo, "cannot open TIFF " + path.string());
    std::uint32_t w = 0, h = 0;
    std::uint16_t planar = PLANARCONFIG_CONTIG, format = SAMPLEFORMAT_UINT;
    std::uint16_t photometric = PHOTOMETRIC_MINISBLACK;
    TIFFGetField(tif_, TIFFTAG_IMAGEWIDTH, &w);
    TIFFGetField(tif_, TIFFTAG_IMAGELENGTH, &h);
    TIFFGetFieldDefaulted(tif_, TIFFTAG_BITSPERSAMPLE, &bits_);
    TIFFGetFieldDefaulted(tif_, TIFFTAG_SAMPLESPERPIXEL, &spp_);
    TIFFGetFieldDefaulted(tif_, TIFFTAG_PLANARCONFIG, &planar);
    TIFFGetFieldDefaulted(tif_, TIFFTAG_SAMPLEFORMAT, &format);
    TIFFGetFieldDefaulted(tif_, TIFFTAG_PHOTOMETRIC, &photometric);
    width_ = w;
    height_ = h;
    if ((bits_ != 8 && bits_ != 16) || format != SAMPLEFORMAT_UINT ||
        planar != PLANARCONFIG_CONTIG ||
        (photometric != PHOTOMETRIC_MINISBLACK &&
         photometric != PHOTOMETRIC_RGB)) {
      TIFFClose(tif_);
      throw Error(ErrorKind::kIo,
                  path.string() +
                      ": slide must be 8/16-bit contiguous grayscale or RGB");
    }
    max_sample_ = MaxSample(bits_);
    tiled_ = TIFFIsTiled(tif_);
    if (tiled_) {
      TIFFGetField(tif_, TIFFTAG_TILEWIDTH, &block_w_);
      TIFFGetField(tif_, TIFFTAG_TILELENGTH, &block_h_);
      block_bytes_ = static_cast<std::size_t>(TIFFTileSize(tif_));
    } else {
      std::uint32_t rps = h;
      TIFFGetFieldDefaulted(tif_, TIFFTAG_ROWSPERSTRIP, &rps);
      block_w_ = w;
      block_h_ = std::min(rps, h);
      block_bytes_ = static_cast<std::size_t>(TIFFStripSize(tif_));
    }
    capacity_ = std::max<std::size_t>(4, kCacheBytes / std::max<std::size_t>(
                                                           1, block_bytes_));
  }

  ~TiffSlide() override {
    if (tif_) TIFFClose(tif_);
  }

  std::int64_t width() const override { return width_; }
  std::int64_t height() const override { return height_; }

  void ReadWindow(const BoundingBox& box, std::span<double> out) const override {
    CheckWindow(box, out.size());
    const std::int64_t bx0 = box.min_x / block_w_;
    const std::int64_t bx1 = (box.max_x - 1) / block_w_;
    const std::int64_t by0 = box.min_y / block_h_;
    const std::int64_t by1 = (box.max_y - 1) / block_h_;
    const int bytes = bits_ / 8;
    std::vector<std::uint32_t> px(spp_);
    std::lock_guard<std::mutex> lock(mutex_);
    for (std::int64_t by = by0; by <= by1; ++by) {
      for (std::int64_t bx = bx0; bx <= bx1; ++bx) {
        const std::vector<std::uint8_t>& block = Block(bx, by);
        const std::int64_t ox = bx * block_w_;
        const std::int64_t oy = by * block_h_;
        const std::int64_t x0 = std::max(box.min_x, ox);
        const std::int64_t x1 = std::min(box.max_x, ox + block_w_);
        const std::int64_t y0 = std::max(box.min_y, oy);
        const std::int64_t y1 = std::min(box.max_y, oy + block_h_);
        for (std::int64_t y = y0; y < y1; ++y) {
          for (std::int64_t x = x0; x < x1; ++x) {
            const std::uint8_t* p =
                block.data() +
                ((y - oy) * block_w_ + (x - ox)) * spp_ * bytes;
            for (int c = 0; c < spp_; ++c) {
              if (bytes == 1) {
                px[c] = p[c];
              } else {
                std::uint16_t v;
                std::memcpy(&v, p + 2 * c, 2);
                px[c] = v;
              }
            }
            out[(y - box.min_y) * box.width() + (x - box.min_x)] =
                GrayValue(px.data(), spp_, max_sample_);
          }
        }
      }
    }
  }

 private:
  static constexpr std::size_t kCacheBytes = std::size_t{64} << 20;

  // Caller holds mutex_.
  const std::vector<std::uint8_t>& Block(std::int64_t bx, std::int64_t by) const {
    const std::int64_t key = by * ((width_ + block_w_ - 1) / block_w_) + bx;
    if (auto it = cache_.find(key); it != cache_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.second);
      return it->second.first;
    }
    std::vector<std::uint8_t> data(block_bytes_);
    tmsize_t got;
    if (tiled_) {
      const ttile_t t = TIFFComputeTile(tif_, static_cast<std::uint32_t>(bx * block_w_),
                                        static_cast<std::uint32_t>(by * block_h_), 0, 0);
      got = TIFFReadEncodedTile(tif_, t, data.data(), data.size());
    } else {
      const tstrip_t s =
          TIFFComputeStrip(tif_, static_cast<std::uint32_t>(by * block_h_), 0);
      got = TIFFReadEncodedStrip(tif_, s, data.data(), data.size());
    }
    if (got < 0) {
      throw Error(ErrorKind::kIo, path_.string() + ": block decode failed");
    }
    if (cache_.size() >= capacity_) {
      cache_.erase(lru_.back());
      lru_.pop_back();
    }
    lru_.push_front(key);
    auto [it, inserted] = cache_.emplace(key, std::make_pair(std::move(data), lru_.begin()));
    return it->second.first;
  }

  std::filesystem::path path_;
  TIFF* tif_ = nullptr;
  std::int64_t width_ = 0;
  std::int64_t height_ = 0;
  std::uint16_t bits_ = 8;
  std::uint16_t spp_ = 1;
  double max_sample_ = 255.0;
  bool tiled_ = false;
  std::uint32_t block_w_ = 0;
  std::uint32_t block_h_ = 0;
  std::size_t block_bytes_ = 0;
  std::size_t capacity_ = 0;

  mutable std::mutex mutex_;
  mutable std::list<std::int64_t> lru_;
  mutable std::unordered_map<
      std::int64_t,
      std::pair<std::vector<std::uint8_t>, std::list<std::int64_t>::iterator>>
      cache_;
};

}  // namespace

double GrayValue(const std::uint32_t* samples, int channels, double max_sample) {
  if (channels >= 3) {
    return (0.2126 * samples[0] + 0.7152 * samples[1] + 0.0722 * samples[2]) /
           max_sample;
  }
  return samples[0] / max_sample;
}

void SlideSource::CheckWindow(const BoundingBox& box, std::size_t out_size) const {
  const BoundingBox slide{0, 0, width(), height()};
  if (!box.valid() || !slide.Contains(box)) {
    throw Error(ErrorKind::kBounds, "window " + BoxText(box) +
                                        " outside slide " + BoxText(slide));
  }
  if (out_size != static_cast<std::size_t>(box.pixel_count())) {
    throw Error(ErrorKind::kShape, "window buffer size mismatch");
  }
}

RasterSlide::RasterSlide(Raster raster)
    : raster_(std::move(raster)), max_sample_(MaxSample(raster_.bits_per_sample)) {}

void RasterSlide::ReadWindow(const BoundingBox& box, std::span<double> out) const {
  CheckWindow(box, out.size());
  const int ch = raster_.channels;
  for (std::int64_t y = box.min_y; y < box.max_y; ++y) {
    const std::uint32_t* row =
        raster_.samples.data() + (y * raster_.width + box.min_x) * ch;
    double* dst = out.data() + (y - box.min_y) * box.width();
    for (std::int64_t x = 0; x < box.width(); ++x) {
      dst[x] = GrayValue(row + x * ch, ch, max_sample_);
    }
  }
}

std::unique_ptr<SlideSource> OpenSlide(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kIo, "no such slide " + path.string());
  }
  if (IsTiffFile(path)) return std::make_unique<TiffSlide>(path);
  return std::make_unique<RasterSlide>(ReadPng(path));
}

IntensityPatch ReadPatch(const SlideSource& slide, const BoundingBox& box) {
  IntensityPatch patch;
  patch.width = box.width();
  patch.height = box.height();
  if (!box.valid()) {
    throw Error(ErrorKind::kBounds, "empty window " + BoxText(box));
  }
  patch.values.resize(static_cast<std::size_t>(box.pixel_count()));
  slide.ReadWindow(box, patch.values);
  return patch;
}

}  // namespace pathex

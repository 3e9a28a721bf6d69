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

/// @file slide_source.h
/// @brief Windowed grayscale access to slide pixels.
///
/// Every source yields intensities normalized to [0,1] by the sample bit
/// depth. RGB samples are converted with luminance weights
/// 0.2126/0.7152/0.0722; a second (alpha) channel is ignored.

#ifndef PATHEX_SLIDE_SOURCE_H_
#define PATHEX_SLIDE_SOURCE_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>

#include "pathex/image_io.h"
#include "pathex/region_model.h"

namespace pathex {

class SlideSource {
 public:
  virtual ~SlideSource() = default;

  virtual std::int64_t width() const = 0;
  virtual std::int64_t height() const = 0;

  /// Writes box.width()*box.height() normalized values, row-major.
  /// Throws kBounds when the window leaves the slide. Safe to call from
  /// several threads.
  virtual void ReadWindow(const BoundingBox& box, std::span<double> out) const = 0;

 protected:
  void CheckWindow(const BoundingBox& box, std::size_t out_size) const;
};

/// A slide fully resident in memory (PNG files, synthetic slides).
class RasterSlide final : public SlideSource {
 public:
  explicit RasterSlide(Raster raster);

  std::int64_t width() const override { return raster_.width; }
  std::int64_t height() const override { return raster_.height; }
  void ReadWindow(const BoundingBox& box, std::span<double> out) const override;

  const Raster& raster() const { return raster_; }

 private:
  Raster raster_;
  double max_sample_;
};

/// Opens a slide. Tiled and striped TIFFs are decoded lazily per tile/strip
/// touched by a window; PNGs are decoded once at open.
std::unique_ptr<SlideSource> OpenSlide(const std::filesystem::path& path);

/// Grayscale crop of exactly the box's dimensions.
IntensityPatch ReadPatch(const SlideSource& slide, const BoundingBox& box);

/// Luminance of one pixel's samples divided by the largest sample value.
double GrayValue(const std::uint32_t* samples, int channels, double max_sample);

}  // namespace pathex

#endif  // PATHEX_SLIDE_SOURCE_H_

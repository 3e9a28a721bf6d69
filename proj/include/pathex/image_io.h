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

/// @file image_io.h
/// @brief Whole-image TIFF and PNG reading/writing.
///
/// Windowed slide access lives in slide_source.h; this header handles
/// rasters that are read or written in one piece (label masks, synthetic
/// slides, PNG slides).

#ifndef PATHEX_IMAGE_IO_H_
#define PATHEX_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <vector>

namespace pathex {

/// Interleaved integer samples, 8/16/32 bits each, stored widened to 32 bit.
struct Raster {
  std::int64_t width = 0;
  std::int64_t height = 0;
  int channels = 1;
  int bits_per_sample = 8;
  std::vector<std::uint32_t> samples;

  std::uint32_t at(std::int64_t x, std::int64_t y, int c = 0) const {
    return samples[static_cast<std::size_t>((y * width + x) * channels + c)];
  }
};

struct TiffWriteOptions {
  bool tiled = true;
  std::uint32_t tile_edge = 256;  // multiple of 16
  bool deflate = true;
};

Raster ReadPng(const std::filesystem::path& path);
Raster ReadTiff(const std::filesystem::path& path);
/// Dispatches on the file signature.
Raster ReadRaster(const std::filesystem::path& path);

/// 8/16-bit, 1/2/3/4 channels.
void WritePng(const std::filesystem::path& path, const Raster& raster);
/// 8/16/32-bit unsigned integer samples.
void WriteTiff(const std::filesystem::path& path, const Raster& raster,
               const TiffWriteOptions& options = {});

bool IsTiffFile(const std::filesystem::path& path);

}  // namespace pathex

#endif  // PATHEX_IMAGE_IO_H_

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

#include "pathex/image_io.h"

#include <png.h>
#include <tiffio.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "pathex/error.h"

namespace pathex {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct TiffCloser {
  void operator()(TIFF* t) const {
    if (t) TIFFClose(t);
  }
};
using TiffPtr = std::unique_ptr<TIFF, TiffCloser>;

[[noreturn]] void IoFail(const std::filesystem::path& path,
                         const std::string& what) {
  throw Error(ErrorKind::kIo, path.string() + ": " + what);
}

void SilenceTiff() {
  static const bool once = [] {
    TIFFSetWarningHandler(nullptr);
    TIFFSetErrorHandler(nullptr);
    return true;
  }();
  (void)once;
}

}  // namespace

bool IsTiffFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size())) return false;
  return (magic[0] == 'I' && magic[1] == 'I' && magic[2] == 42) ||
         (magic[0] == 'M' && magic[1] == 'M' && magic[3] == 42);
}

Raster ReadPng(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) IoFail(path, "cannot open");
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    IoFail(path, "libpng initialisation failed");
  }
  Raster raster;
  std::vector<std::uint8_t> buffer;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    IoFail(path, "corrupt PNG");
  }
  png_init_io(png, file.get());
  png_read_info(png, info);
  const png_byte color = png_get_color_type(png, info);
  const int depth = png_get_bit_depth(png, info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (depth == 16) png_set_swap(png);
  png_read_update_info(png, info);
  raster.width = png_get_image_width(png, info);
  raster.height = png_get_image_height(png, info);
  raster.channels = png_get_channels(png, info);
  raster.bits_per_sample = png_get_bit_depth(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  buffer.resize(row_bytes * static_cast<std::size_t>(raster.height));
  rows.resize(static_cast<std::size_t>(raster.height));
  for (std::int64_t y = 0; y < raster.height; ++y) {
    rows[y] = buffer.data() + y * row_bytes;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  const std::size_t count = static_cast<std::size_t>(raster.width) *
                            raster.height * raster.channels;
  raster.samples.resize(count);
  if (raster.bits_per_sample == 16) {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint16_t v;
      std::memcpy(&v, buffer.data() + 2 * i, 2);
      raster.samples[i] = v;
    }
  } else {
    std::copy_n(buffer.begin(), count, raster.samples.begin());
  }
  return raster;
}

void WritePng(const std::filesystem::path& path, const Raster& raster) {
  if (raster.bits_per_sample != 8 && raster.bits_per_sample != 16) {
    IoFail(path, "PNG supports 8 or 16 bit samples only");
  }
  int color = 0;
  switch (raster.channels) {
    case 1: color = PNG_COLOR_TYPE_GRAY; break;
    case 2: color = PNG_COLOR_TYPE_GRAY_ALPHA; break;
    case 3: color = PNG_COLOR_TYPE_RGB; break;
    case 4: color = PNG_COLOR_TYPE_RGB_ALPHA; break;
    default: IoFail(path, "unsupported channel count");
  }
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) IoFail(path, "cannot create");
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    IoFail(path, "libpng initialisation failed");
  }
  const int bytes = raster.bits_per_sample / 8;
  const std::size_t row_bytes =
      static_cast<std::size_t>(raster.width) * raster.channels * bytes;
  std::vector<std::uint8_t> row(row_bytes);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    IoFail(path, "PNG encoding failed");
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width),
               static_cast<png_uint_32>(raster.height), raster.bits_per_sample,
               color, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t per_row =
      static_cast<std::size_t>(raster.width) * raster.channels;
  for (std::int64_t y = 0; y < raster.height; ++y) {
    const std::uint32_t* src = raster.samples.data() + y * per_row;
    for (std::size_t i = 0; i < per_row; ++i) {
      if (bytes == 1) {
        row[i] = static_cast<std::uint8_t>(src[i]);
      } else {  // PNG is big-endian
        row[2 * i] = static_cast<std::uint8_t>(src[i] >> 8);
        row[2 * i + 1] = static_cast<std::uint8_t>(src[i] & 0xff);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Raster ReadTiff(const std::filesystem::path& path) {
  SilenceTiff();
  TiffPtr tif(TIFFOpen(path.c_str(), "r"));
  if (!tif) IoFail(path, "cannot open TIFF");
  std::uint32_t width = 0, height = 0;
  std::uint16_t bits = 8, spp = 1, planar = PLANARCONFIG_CONTIG;
  std::uint16_t format = SAMPLEFORMAT_UINT;
  TIFFGetField(tif.get(), TIFFTAG_IMAGEWIDTH, &width);
  TIFFGetField(tif.get(), TIFFTAG_IMAGELENGTH, &height);
  TIFFGetFieldDefaulted(tif.get(), TIFFTAG_BITSPERSAMPLE, &bits);
  TIFFGetFieldDefaulted(tif.get(), TIFFTAG_SAMPLESPERPIXEL, &spp);
  TIFFGetFieldDefaulted(tif.get(), TIFFTAG_PLANARCONFIG, &planar);
  TIFFGetFieldDefaulted(tif.get(), TIFFTAG_SAMPLEFORMAT, &format);
  if (bits != 8 && bits != 16 && bits != 32) {
    IoFail(path, "unsupported bit depth " + std::to_string(bits));
  }
  if (format != SAMPLEFORMAT_UINT || planar != PLANARCONFIG_CONTIG) {
    IoFail(path, "only contiguous unsigned integer TIFF is supported");
  }
  Raster raster;
  raster.width = width;
  raster.height = height;
  raster.channels = spp;
  raster.bits_per_sample = bits;
  const std::size_t per_row = static_cast<std::size_t>(width) * spp;
  raster.samples.resize(per_row * height);
  const int bytes = bits / 8;

  auto store = [&](const std::uint8_t* src, std::uint32_t x0, std::uint32_t y0,
                   std::uint32_t w, std::uint32_t h, std::uint32_t src_w) {
    for (std::uint32_t y = 0; y < h && y0 + y < height; ++y) {
      for (std::uint32_t x = 0; x < w && x0 + x < width; ++x) {
        for (int c = 0; c < spp; ++c) {
          const std::uint8_t* p = src + ((y * src_w + x) * spp + c) * bytes;
          std::uint32_t v = 0;
          if (bytes == 1) {
            v = *p;
          } else if (bytes == 2) {
            std::uint16_t t;
            std::memcpy(&t, p, 2);
            v = t;
          } else {
            std::memcpy(&v, p, 4);
          }
          raster.samples[(y0 + y) * per_row + (x0 + x) * spp + c] = v;
        }
      }
    }
  };

  if (TIFFIsTiled(tif.get())) {
    std::uint32_t tw = 0, th = 0;
    TIFFGetField(tif.get(), TIFFTAG_TILEWIDTH, &tw);
    TIFFGetField(tif.get(), TIFFTAG_TILELENGTH, &th);
    std::vector<std::uint8_t> tile(TIFFTileSize(tif.get()));
    for (std::uint32_t ty = 0; ty < height; ty += th) {
      for (std::uint32_t tx = 0; tx < width; tx += tw) {
        const ttile_t index = TIFFComputeTile(tif.get(), tx, ty, 0, 0);
        if (TIFFReadEncodedTile(tif.get(), index, tile.data(), tile.size()) < 0) {
          IoFail(path, "tile decode failed");
        }
        store(tile.data(), tx, ty, tw, th, tw);
      }
    }
  } else {
    std::uint32_t rps = height;
    TIFFGetFieldDefaulted(tif.get(), TIFFTAG_ROWSPERSTRIP, &rps);
    rps = std::min(rps, height);
    std::vector<std::uint8_t> strip(TIFFStripSize(tif.get()));
    for (std::uint32_t y = 0; y < height; y += rps) {
      const tstrip_t index = TIFFComputeStrip(tif.get(), y, 0);
      if (TIFFReadEncodedStrip(tif.get(), index, strip.data(), strip.size()) <
          0) {
        IoFail(path, "strip decode failed");
      }
      store(strip.data(), 0, y, width, rps, width);
    }
  }
  return raster;
}

Raster ReadRaster(const std::filesystem::path& path) {
  return IsTiffFile(path) ? ReadTiff(path) : ReadPng(path);
}

void WriteTiff(const std::filesystem::path& path, const Raster& raster,
               const TiffWriteOptions& options) {
  SilenceTiff();
  const int bits = raster.bits_per_sample;
  if (bits != 8 && bits != 16 && bits != 32) {
    IoFail(path, "unsupported bit depth");
  }
  TiffPtr tif(TIFFOpen(path.c_str(), "w"));
  if (!tif) IoFail(path, "cannot create TIFF");
  TIFF* t = tif.get();
  TIFFSetField(t, TIFFTAG_IMAGEWIDTH, static_cast<std::uint32_t>(raster.width));
  TIFFSetField(t, TIFFTAG_IMAGELENGTH, static_cast<std::uint32_t>(raster.height));
  TIFFSetField(t, TIFFTAG_BITSPERSAMPLE, static_cast<std::uint16_t>(bits));
  TIFFSetField(t, TIFFTAG_SAMPLESPERPIXEL,
               static_cast<std::uint16_t>(raster.channels));
  TIFFSetField(t, TIFFTAG_SAMPLEFORMAT, SAMPLEFORMAT_UINT);
  TIFFSetField(t, TIFFTAG_PLANARCONFIG, PLANARCONFIG_CONTIG);
  TIFFSetField(t, TIFFTAG_PHOTOMETRIC,
               raster.channels >= 3 ? PHOTOMETRIC_RGB : PHOTOMETRIC_MINISBLACK);
  const bool deflate =
      options.deflate && TIFFIsCODECConfigured(COMPRESSION_ADOBE_DEFLATE);
  TIFFSetField(t, TIFFTAG_COMPRESSION,
               deflate ? COMPRESSION_ADOBE_DEFLATE : COMPRESSION_NONE);

  const int bytes = bits / 8;
  const int spp = raster.channels;
  auto pack = [&](std::uint8_t* dst, std::uint32_t x0, std::uint32_t y0,
                  std::uint32_t w, std::uint32_t h) {
    for (std::uint32_t y = 0; y < h; ++y) {
      for (std::uint32_t x = 0; x < w; ++x) {
        for (int c = 0; c < spp; ++c) {
          std::uint32_t v = 0;
          if (x0 + x < raster.width && y0 + y < raster.height) {
            v = raster.at(x0 + x, y0 + y, c);
          }
          std::uint8_t* p = dst + ((y * w + x) * spp + c) * bytes;
          if (bytes == 1) {
            *p = static_cast<std::uint8_t>(v);
          } else if (bytes == 2) {
            const auto s = static_cast<std::uint16_t>(v);
            std::memcpy(p, &s, 2);
          } else {
            std::memcpy(p, &v, 4);
          }
        }
      }
    }
  };

  if (options.tiled) {
    const std::uint32_t edge = options.tile_edge;
    TIFFSetField(t, TIFFTAG_TILEWIDTH, edge);
    TIFFSetField(t, TIFFTAG_TILELENGTH, edge);
    std::vector<std::uint8_t> tile(static_cast<std::size_t>(edge) * edge * spp *
                                   bytes);
    for (std::uint32_t ty = 0; ty < raster.height; ty += edge) {
      for (std::uint32_t tx = 0; tx < raster.width; tx += edge) {
        pack(tile.data(), tx, ty, edge, edge);
        if (TIFFWriteTile(t, tile.data(), tx, ty, 0, 0) < 0) {
          IoFail(path, "tile write failed");
        }
      }
    }
  } else {
    const auto w = static_cast<std::uint32_t>(raster.width);
    const std::uint32_t rps = std::max<std::uint32_t>(
        1, static_cast<std::uint32_t>(65536 / (static_cast<std::size_t>(w) *
                                                spp * bytes + 1)));
    TIFFSetField(t, TIFFTAG_ROWSPERSTRIP, rps);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * spp * bytes);
    for (std::uint32_t y = 0; y < raster.height; ++y) {
      pack(row.data(), 0, y, w, 1);
      if (TIFFWriteScanline(t, row.data(), y, 0) < 0) {
        IoFail(path, "scanline write failed");
      }
    }
  }
  if (!TIFFWriteDirectory(t)) IoFail(path, "directory write failed");
}

}  // namespace pathex

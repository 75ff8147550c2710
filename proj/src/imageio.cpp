// Copyright 2026 The vdp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vdp/imageio.hpp"

#include <png.h>

#include <ImfArray.h>
#include <ImfRgba.h>
#include <ImfRgbaFile.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <map>
#include <memory>

#include "vdp/errors.hpp"

namespace vdp {
namespace {

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) fclose(fp);
  }
};

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) fclose(fp);
  }
};

DisplayEncodedFrame load_png(const std::string& path, Encoding tag) {
  PngReadCloser ctx;
  ctx.fp = fopen(path.c_str(), "rb");
  if (!ctx.fp) throw IoError("cannot open image file: " + path);

  uint8_t header[8];
  if (fread(header, 1, 8, ctx.fp) != 8 || png_sig_cmp(header, 0, 8))
    throw IoError("not a PNG file: " + path);

  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw IoError("libpng init failure");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng init failure");
  if (setjmp(png_jmpbuf(ctx.png))) throw IoError("corrupt PNG: " + path);

  png_init_io(ctx.png, ctx.fp);
  png_set_sig_bytes(ctx.png, 8);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);

  if (color_type != PNG_COLOR_TYPE_RGB)
    throw IoError("PNG must be 3-channel RGB: " + path);
  if (bit_depth != 8 && bit_depth != 16)
    throw IoError("PNG must be 8- or 16-bit: " + path);

  if (bit_depth == 16) png_set_swap(ctx.png);  // PNG stores big-endian
  png_read_update_info(ctx.png, ctx.info);

  const size_t row_bytes = png_get_rowbytes(ctx.png, ctx.info);
  std::vector<uint8_t> raster(row_bytes * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = raster.data() + y * row_bytes;
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);

  DisplayEncodedFrame frame;
  frame.encoding = tag;
  frame.r = Image(w, h);
  frame.g = Image(w, h);
  frame.b = Image(w, h);

  if (bit_depth == 8) {
    for (png_uint_32 y = 0; y < h; ++y) {
      const uint8_t* row = raster.data() + y * row_bytes;
      for (png_uint_32 x = 0; x < w; ++x) {
        frame.r(x, y) = row[3 * x + 0] / 255.0;
        frame.g(x, y) = row[3 * x + 1] / 255.0;
        frame.b(x, y) = row[3 * x + 2] / 255.0;
      }
    }
  } else {
    for (png_uint_32 y = 0; y < h; ++y) {
      const uint16_t* row = reinterpret_cast<const uint16_t*>(raster.data() + y * row_bytes);
      for (png_uint_32 x = 0; x < w; ++x) {
        frame.r(x, y) = row[3 * x + 0] / 65535.0;
        frame.g(x, y) = row[3 * x + 1] / 65535.0;
        frame.b(x, y) = row[3 * x + 2] / 65535.0;
      }
    }
  }
  return frame;
}

DisplayEncodedFrame load_exr(const std::string& path) {
  try {
    Imf::RgbaInputFile file(path.c_str());
    const Imath::Box2i dw = file.dataWindow();
    const int w = dw.max.x - dw.min.x + 1;
    const int h = dw.max.y - dw.min.y + 1;
    Imf::Array2D<Imf::Rgba> pixels(h, w);
    file.setFrameBuffer(&pixels[0][0] - dw.min.x - dw.min.y * w, 1, w);
    file.readPixels(dw.min.y, dw.max.y);

    DisplayEncodedFrame frame;
    frame.encoding = Encoding::linear;
    frame.r = Image(w, h);
    frame.g = Image(w, h);
    frame.b = Image(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        frame.r(x, y) = pixels[y][x].r;
        frame.g(x, y) = pixels[y][x].g;
        frame.b(x, y) = pixels[y][x].b;
      }
    }
    return frame;
  } catch (const std::exception& e) {
    throw IoError("cannot read EXR " + path + ": " + e.what());
  }
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  std::string tail = s.substr(s.size() - suffix.size());
  std::transform(tail.begin(), tail.end(), tail.begin(), ::tolower);
  return tail == suffix;
}

}  // namespace

DisplayEncodedFrame load_image(const std::string& path, Encoding tag) {
  if (has_suffix(path, ".exr")) {
    if (tag != Encoding::linear)
      throw ConfigError("EXR input requires the linear encoding tag: " + path);
    return load_exr(path);
  }
  return load_png(path, tag);
}

void write_png_rgb8(const std::string& path, int width, int height,
                    const std::vector<uint8_t>& interleaved) {
  if (interleaved.size() != static_cast<size_t>(width) * height * 3)
    throw NumericError("write_png_rgb8: buffer size mismatch");
  PngWriteCloser ctx;
  ctx.fp = fopen(path.c_str(), "wb");
  if (!ctx.fp) throw IoError("cannot open for writing: " + path);
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw IoError("libpng init failure");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw IoError("libpng init failure");
  if (setjmp(png_jmpbuf(ctx.png))) throw IoError("PNG write failure: " + path);

  png_init_io(ctx.png, ctx.fp);
  png_set_IHDR(ctx.png, ctx.info, width, height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(interleaved.data() + static_cast<size_t>(y) * width * 3);
  png_write_image(ctx.png, rows.data());
  png_write_end(ctx.png, nullptr);
}

const std::array<std::array<uint8_t, 3>, 256>& heatmap_ramp() {
  // Piecewise-linear dark-to-hot ramp; anchor colors below, linearly
  // interpolated and rounded to the nearest 8-bit value.
  static const std::array<std::array<uint8_t, 3>, 256> table = [] {
    struct Anchor {
      double t;
      double rgb[3];
    };
    static const Anchor anchors[] = {
        {0.000, {0, 0, 4}},      {0.125, {26, 12, 64}},   {0.250, {77, 18, 120}},
        {0.375, {130, 29, 110}}, {0.500, {180, 49, 86}},  {0.625, {220, 81, 58}},
        {0.750, {246, 123, 26}}, {0.875, {252, 180, 40}}, {1.000, {249, 245, 150}},
    };
    std::array<std::array<uint8_t, 3>, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double v = i / 255.0;
      size_t seg = 0;
      while (seg + 2 < std::size(anchors) && v > anchors[seg + 1].t) ++seg;
      const Anchor& a = anchors[seg];
      const Anchor& b = anchors[seg + 1];
      const double u = (v - a.t) / (b.t - a.t);
      for (int c = 0; c < 3; ++c)
        t[i][c] = static_cast<uint8_t>(std::lround(a.rgb[c] + u * (b.rgb[c] - a.rgb[c])));
    }
    return t;
  }();
  return table;
}

void write_heatmap(const Image& map01, const std::string& path) {
  const auto& ramp = heatmap_ramp();
  const int w = map01.width(), h = map01.height();
  std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = map01(x, y);
      if (v < -1e-9 || v > 1.0 + 1e-9)
        throw NumericError("write_heatmap: map value outside [0,1]");
      const int idx = static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
      const auto& c = ramp[idx];
      rgb[(static_cast<size_t>(y) * w + x) * 3 + 0] = c[0];
      rgb[(static_cast<size_t>(y) * w + x) * 3 + 1] = c[1];
      rgb[(static_cast<size_t>(y) * w + x) * 3 + 2] = c[2];
    }
  }
  write_png_rgb8(path, w, h, rgb);
}

int heatmap_decode(const std::array<uint8_t, 3>& color) {
  static const std::map<std::array<uint8_t, 3>, int> reverse = [] {
    std::map<std::array<uint8_t, 3>, int> m;
    const auto& ramp = heatmap_ramp();
    for (int i = 0; i < 256; ++i) m[ramp[i]] = i;
    return m;
  }();
  auto it = reverse.find(color);
  if (it == reverse.end()) throw NumericError("heatmap_decode: color not in ramp");
  return it->second;
}

void write_plane_png(const Image& plane, const std::string& path) {
  const double lo = plane.min(), hi = plane.max();
  const double scale = hi > lo ? 1.0 / (hi - lo) : 0.0;
  const int w = plane.width(), h = plane.height();
  std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto g = static_cast<uint8_t>(std::lround((plane(x, y) - lo) * scale * 255.0));
      for (int c = 0; c < 3; ++c) rgb[(static_cast<size_t>(y) * w + x) * 3 + c] = g;
    }
  }
  write_png_rgb8(path, w, h, rgb);
}

std::vector<std::string> list_frame_files(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::map<int, std::string> ordered;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    int index = -1;
    if (sscanf(name.c_str(), "frame_%d.png", &index) == 1 && index >= 0)
      ordered[index] = entry.path().string();
  }
  if (ordered.empty()) throw IoError("no frame_%06d.png files in " + dir);
  std::vector<std::string> files;
  files.reserve(ordered.size());
  for (auto& [idx, p] : ordered) files.push_back(std::move(p));
  return files;
}

}  // namespace vdp

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

#ifndef VDP_IMAGEIO_HPP_
#define VDP_IMAGEIO_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vdp/image.hpp"

namespace vdp {

enum class Encoding { pq, srgb, linear };

// Display-encoded RGB raster.  PNG samples are normalized to [0,1]
// (v/255 or v/65535); EXR carries absolute linear values as-is.
struct DisplayEncodedFrame {
  Image r, g, b;
  Encoding encoding = Encoding::pq;

  int width() const { return r.width(); }
  int height() const { return r.height(); }
};

// Reads an 8/16-bit RGB PNG, or an OpenEXR file when `tag` is linear.
// The decode is a pure function of the file bytes.
DisplayEncodedFrame load_image(const std::string& path, Encoding tag);

// Writes an 8-bit RGB PNG.
void write_png_rgb8(const std::string& path, int width, int height,
                    const std::vector<uint8_t>& interleaved);

// 256-entry color ramp used by heat map exports.  Entry i is the color of
// map value i/255; all entries are distinct so the quantized mapping is
// invertible.
const std::array<std::array<uint8_t, 3>, 256>& heatmap_ramp();

// Maps a [0,1] map through the ramp (index = lround(v*255)) into a PNG.
void write_heatmap(const Image& map01, const std::string& path);

// Exact inverse of the ramp lookup; errors on colors not in the ramp.
int heatmap_decode(const std::array<uint8_t, 3>& color);

// Grayscale dump of an arbitrary plane, min..max stretched to 0..255.
// Debug aid for band inspection.
void write_plane_png(const Image& plane, const std::string& path);

// Files named frame_%06d.png in ascending index order.
std::vector<std::string> list_frame_files(const std::string& dir);

}  // namespace vdp

#endif  // VDP_IMAGEIO_HPP_

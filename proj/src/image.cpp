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

#include "vdp/image.hpp"

#include <algorithm>
#include <cmath>

#include "vdp/errors.hpp"

namespace vdp {

double Image::min() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Image::max() const {
  return *std::max_element(data_.begin(), data_.end());
}

double Image::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

double Image::mean() const { return sum() / static_cast<double>(size()); }

Image mirror_double(const Image& src) {
  const int w = src.width(), h = src.height();
  Image out(2 * w, 2 * h);
  for (int y = 0; y < 2 * h; ++y) {
    const int sy = y < h ? y : 2 * h - 1 - y;
    for (int x = 0; x < 2 * w; ++x) {
      const int sx = x < w ? x : 2 * w - 1 - x;
      out(x, y) = src(sx, sy);
    }
  }
  return out;
}

Image mirror_pad_br(const Image& src, int new_w, int new_h) {
  const int w = src.width(), h = src.height();
  if (new_w < w || new_h < h || new_w - w >= w || new_h - h >= h)
    throw NumericError("mirror_pad_br: padding out of range");
  Image out(new_w, new_h);
  for (int y = 0; y < new_h; ++y) {
    const int sy = y < h ? y : 2 * h - 1 - y;
    for (int x = 0; x < new_w; ++x) {
      const int sx = x < w ? x : 2 * w - 1 - x;
      out(x, y) = src(sx, sy);
    }
  }
  return out;
}

Image crop(const Image& src, int x0, int y0, int w, int h) {
  if (x0 < 0 || y0 < 0 || x0 + w > src.width() || y0 + h > src.height())
    throw NumericError("crop: region out of bounds");
  Image out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out(x, y) = src(x0 + x, y0 + y);
  return out;
}

Image resize_bilinear(const Image& src, int w, int h) {
  const int sw = src.width(), sh = src.height();
  Image out(w, h);
  const double sx_step = w > 1 ? static_cast<double>(sw - 1) / (w - 1) : 0.0;
  const double sy_step = h > 1 ? static_cast<double>(sh - 1) / (h - 1) : 0.0;
  for (int y = 0; y < h; ++y) {
    const double fy = y * sy_step;
    const int y0 = std::min(static_cast<int>(fy), sh - 1);
    const int y1 = std::min(y0 + 1, sh - 1);
    const double wy = fy - y0;
    for (int x = 0; x < w; ++x) {
      const double fx = x * sx_step;
      const int x0 = std::min(static_cast<int>(fx), sw - 1);
      const int x1 = std::min(x0 + 1, sw - 1);
      const double wx = fx - x0;
      out(x, y) = (1 - wy) * ((1 - wx) * src(x0, y0) + wx * src(x1, y0)) +
                  wy * ((1 - wx) * src(x0, y1) + wx * src(x1, y1));
    }
  }
  return out;
}

}  // namespace vdp

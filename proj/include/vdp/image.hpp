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

#ifndef VDP_IMAGE_HPP_
#define VDP_IMAGE_HPP_

#include <cstddef>
#include <vector>

namespace vdp {

// Single-channel raster of doubles, row-major.
class Image {
 public:
  Image() = default;
  Image(int width, int height, double fill = 0.0)
      : width_(width), height_(height),
        data_(static_cast<size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int x, int y) { return data_[static_cast<size_t>(y) * width_ + x]; }
  double operator()(int x, int y) const { return data_[static_cast<size_t>(y) * width_ + x]; }
  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool same_size(const Image& o) const {
    return width_ == o.width_ && height_ == o.height_;
  }

  double min() const;
  double max() const;
  double sum() const;
  double mean() const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// Half-sample symmetric extension to double size: [x | reflect(x)] along both
// axes.  A symmetric kernel convolved over this extension conserves the sum
// over the original domain (no net flux across reflected borders).
Image mirror_double(const Image& src);

// Extend right/bottom by half-sample reflection up to (new_w, new_h).
// Padding must be smaller than the source size on each axis.
Image mirror_pad_br(const Image& src, int new_w, int new_h);

Image crop(const Image& src, int x0, int y0, int w, int h);

// Bilinear resampling; corner-aligned sample positions.
Image resize_bilinear(const Image& src, int w, int h);

}  // namespace vdp

#endif  // VDP_IMAGE_HPP_

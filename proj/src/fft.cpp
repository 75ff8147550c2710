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

#include "vdp/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "vdp/errors.hpp"

namespace vdp::fft {
namespace {

enum class Kind { r2c, c2r, c2c_fwd, c2c_bwd };

// FFTW planning is not thread-safe; execution via the new-array interface is.
// Plans are created with FFTW_UNALIGNED so they can run on any buffer, which
// also keeps results bit-identical regardless of allocation addresses.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int w, int h, Kind kind) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto key = std::make_tuple(w, h, kind);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    const size_t n = static_cast<size_t>(w) * h;
    switch (kind) {
      case Kind::r2c: {
        std::vector<double> in(n);
        std::vector<fftw_complex> out(static_cast<size_t>(h) * (w / 2 + 1));
        plan = fftw_plan_dft_r2c_2d(h, w, in.data(), out.data(), flags);
        break;
      }
      case Kind::c2r: {
        std::vector<fftw_complex> in(static_cast<size_t>(h) * (w / 2 + 1));
        std::vector<double> out(n);
        plan = fftw_plan_dft_c2r_2d(h, w, in.data(), out.data(), flags);
        break;
      }
      case Kind::c2c_fwd:
      case Kind::c2c_bwd: {
        std::vector<fftw_complex> in(n), out(n);
        plan = fftw_plan_dft_2d(h, w, in.data(), out.data(),
                                kind == Kind::c2c_fwd ? FFTW_FORWARD : FFTW_BACKWARD, flags);
        break;
      }
    }
    if (!plan) throw NumericError("fftw planning failed");
    plans_[key] = plan;
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, Kind>, fftw_plan> plans_;
};

}  // namespace

double bin_frequency(int k, int n) {
  return (k <= n / 2 ? k : k - n) / static_cast<double>(n);
}

Spectrum forward(const Image& img) {
  const int w = img.width(), h = img.height();
  Spectrum spec;
  spec.width = w;
  spec.height = h;
  spec.data.resize(static_cast<size_t>(h) * (w / 2 + 1));
  fftw_plan plan = PlanCache::instance().get(w, h, Kind::r2c);
  std::vector<double> in(img.data(), img.data() + img.size());
  fftw_execute_dft_r2c(plan, in.data(), reinterpret_cast<fftw_complex*>(spec.data.data()));
  return spec;
}

Image inverse(const Spectrum& spec) {
  const int w = spec.width, h = spec.height;
  Image out(w, h);
  fftw_plan plan = PlanCache::instance().get(w, h, Kind::c2r);
  // c2r destroys its input, so run on a copy.
  std::vector<std::complex<double>> in(spec.data);
  fftw_execute_dft_c2r(plan, reinterpret_cast<fftw_complex*>(in.data()), out.data());
  const double scale = 1.0 / (static_cast<double>(w) * h);
  for (size_t i = 0; i < out.size(); ++i) out[i] *= scale;
  return out;
}

ComplexSpectrum forward_complex(const Image& img) {
  const int w = img.width(), h = img.height();
  ComplexSpectrum spec;
  spec.width = w;
  spec.height = h;
  spec.data.resize(static_cast<size_t>(w) * h);
  std::vector<std::complex<double>> in(spec.data.size());
  for (size_t i = 0; i < img.size(); ++i) in[i] = img[i];
  fftw_plan plan = PlanCache::instance().get(w, h, Kind::c2c_fwd);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(spec.data.data()));
  return spec;
}

Image inverse_complex_real(const ComplexSpectrum& spec) {
  const int w = spec.width, h = spec.height;
  std::vector<std::complex<double>> in(spec.data), out(spec.data.size());
  fftw_plan plan = PlanCache::instance().get(w, h, Kind::c2c_bwd);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  Image img(w, h);
  const double scale = 1.0 / (static_cast<double>(w) * h);
  for (size_t i = 0; i < img.size(); ++i) img[i] = out[i].real() * scale;
  return img;
}

Image filter_periodic(const Image& img, const FreqFilter& filter) {
  if (!filter.matches(img.width(), img.height()))
    throw NumericError("filter_periodic: filter dimensions do not match image");
  Spectrum spec = forward(img);
  for (size_t i = 0; i < spec.data.size(); ++i) spec.data[i] *= filter.gain[i];
  return inverse(spec);
}

Image gaussian_blur(const Image& img, double sigma_px, bool periodic) {
  if (sigma_px <= 0.0) return img;  // delta kernel
  if (!periodic) {
    Image big = mirror_double(img);
    Image blurred = gaussian_blur(big, sigma_px, true);
    return crop(blurred, 0, 0, img.width(), img.height());
  }
  const int w = img.width(), h = img.height();
  FreqFilter f;
  f.width = w;
  f.height = h;
  f.gain.resize(static_cast<size_t>(h) * (w / 2 + 1));
  const double c = -2.0 * M_PI * M_PI * sigma_px * sigma_px;
  for (int ky = 0; ky < h; ++ky) {
    const double fy = bin_frequency(ky, h);
    for (int kx = 0; kx <= w / 2; ++kx) {
      const double fx = bin_frequency(kx, w);
      f.at(kx, ky) = std::exp(c * (fx * fx + fy * fy));
    }
  }
  return filter_periodic(img, f);
}

}  // namespace vdp::fft

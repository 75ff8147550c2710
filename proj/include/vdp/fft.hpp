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

#ifndef VDP_FFT_HPP_
#define VDP_FFT_HPP_

#include <complex>
#include <vector>

#include "vdp/image.hpp"

namespace vdp::fft {

// Half-plane spectrum of a real image (FFTW r2c layout):
// height rows of (width/2 + 1) bins; `width`/`height` are spatial dims.
struct Spectrum {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> data;

  int bins_x() const { return width / 2 + 1; }
  std::complex<double>& at(int kx, int ky) { return data[static_cast<size_t>(ky) * bins_x() + kx]; }
  const std::complex<double>& at(int kx, int ky) const {
    return data[static_cast<size_t>(ky) * bins_x() + kx];
  }
};

// Full complex spectrum (c2c layout), used by the band decomposition.
struct ComplexSpectrum {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int kx, int ky) { return data[static_cast<size_t>(ky) * width + kx]; }
  const std::complex<double>& at(int kx, int ky) const {
    return data[static_cast<size_t>(ky) * width + kx];
  }
};

// Real multiplicative gains on the r2c half-plane.
struct FreqFilter {
  int width = 0;   // spatial width the filter was built for
  int height = 0;
  std::vector<double> gain;  // height x (width/2+1)

  int bins_x() const { return width / 2 + 1; }
  double& at(int kx, int ky) { return gain[static_cast<size_t>(ky) * bins_x() + kx]; }
  double at(int kx, int ky) const { return gain[static_cast<size_t>(ky) * bins_x() + kx]; }
  bool matches(int w, int h) const { return width == w && height == h; }
};

// Signed frequency of a DFT bin in cycles per sample, range (-0.5, 0.5].
double bin_frequency(int k, int n);

Spectrum forward(const Image& img);
Image inverse(const Spectrum& spec);  // includes the 1/(w*h) scale

ComplexSpectrum forward_complex(const Image& img);
Image inverse_complex_real(const ComplexSpectrum& spec);  // real part, scaled

// Pointwise spectrum multiply by filter gains; dims must match.
Image filter_periodic(const Image& img, const FreqFilter& filter);

// Gaussian low-pass, unit DC gain.  `periodic` wraps; otherwise the image is
// mirror-doubled first so borders see reflected content.
Image gaussian_blur(const Image& img, double sigma_px, bool periodic);

}  // namespace vdp::fft

#endif  // VDP_FFT_HPP_

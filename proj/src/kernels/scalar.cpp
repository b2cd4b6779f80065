// Copyright 2026 The QMA VerifLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scalar reference kernels. Straight loops over interleaved (re, im) pairs;
// these define the expected results for every vectorized variant.

#include "qvl/kernels/kernels.hpp"

namespace qvl::kernels {
namespace {

void dotc(std::size_t n, const double* x, const double* y, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void dotu(std::size_t n, const double* x, const double* y, double* out) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void axpy(std::size_t n, const double* a, const double* x, double* y) {
  const double ar = a[0], ai = a[1];
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    y[2 * i] += ar * xr - ai * xi;
    y[2 * i + 1] += ar * xi + ai * xr;
  }
}

void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
          double* c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + 2 * i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double* coef = a + 2 * (i * k + p);
      if (coef[0] == 0.0 && coef[1] == 0.0) continue;
      axpy(n, coef, b + 2 * p * n, crow);
    }
  }
}

void pair_update(std::size_t n, std::size_t stride, const double* g, double* amps) {
  const double g00r = g[0], g00i = g[1], g01r = g[2], g01i = g[3];
  const double g10r = g[4], g10i = g[5], g11r = g[6], g11i = g[7];
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      double* lo = amps + 2 * (base + j);
      double* hi = amps + 2 * (base + j + stride);
      const double ar = lo[0], ai = lo[1], br = hi[0], bi = hi[1];
      lo[0] = g00r * ar - g00i * ai + g01r * br - g01i * bi;
      lo[1] = g00r * ai + g00i * ar + g01r * bi + g01i * br;
      hi[0] = g10r * ar - g10i * ai + g11r * br - g11i * bi;
      hi[1] = g10r * ai + g10i * ar + g11r * bi + g11i * br;
    }
  }
}

double norm_sq(std::size_t n, const double* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) s += x[i] * x[i];
  return s;
}

constexpr KernelTable kScalarTable{
    Isa::kScalar, "scalar", &dotc, &dotu, &axpy, &gemm, &pair_update, &norm_sq,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace qvl::kernels

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

// AVX2 + FMA variants. One __m256d holds two complex doubles
// [re0, im0, re1, im1]. This translation unit is compiled with -mavx2 -mfma
// and is only entered after a runtime CPU check.

#include <immintrin.h>

#include "qvl/kernels/table.hpp"

namespace qvl::kernels {
namespace {

// Horizontal sum of the even lanes and of the odd lanes.
inline void reduce_pairs(__m256d v, double* even, double* odd) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  *even = _mm_cvtsd_f64(s);
  *odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

// (ar + i ai) * x for two complex lanes.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

void dotc(std::size_t n, const double* x, const double* y, double* out) {
  __m256d same = _mm256_setzero_pd();   // [xr*yr, xi*yi, ...]
  __m256d cross = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  double a, b, c, d;
  reduce_pairs(same, &a, &b);
  reduce_pairs(cross, &c, &d);
  double re = a + b;
  double im = c - d;
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void dotu(std::size_t n, const double* x, const double* y, double* out) {
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    same = _mm256_fmadd_pd(xv, yv, same);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  double a, b, c, d;
  reduce_pairs(same, &a, &b);
  reduce_pairs(cross, &c, &d);
  double re = a - b;
  double im = c + d;
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  out[0] = re;
  out[1] = im;
}

void axpy(std::size_t n, const double* a, const double* x, double* y) {
  const __m256d ar = _mm256_set1_pd(a[0]);
  const __m256d ai = _mm256_set1_pd(a[1]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, cmul_bcast(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    y[2 * i] += a[0] * xr - a[1] * xi;
    y[2 * i + 1] += a[0] * xi + a[1] * xr;
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
  const __m256d g00r = _mm256_set1_pd(g[0]), g00i = _mm256_set1_pd(g[1]);
  const __m256d g01r = _mm256_set1_pd(g[2]), g01i = _mm256_set1_pd(g[3]);
  const __m256d g10r = _mm256_set1_pd(g[4]), g10i = _mm256_set1_pd(g[5]);
  const __m256d g11r = _mm256_set1_pd(g[6]), g11i = _mm256_set1_pd(g[7]);
  if (stride >= 2) {
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t j = 0; j + 2 <= stride; j += 2) {
        double* lo = amps + 2 * (base + j);
        double* hi = amps + 2 * (base + j + stride);
        const __m256d av = _mm256_loadu_pd(lo);
        const __m256d bv = _mm256_loadu_pd(hi);
        const __m256d nlo = _mm256_add_pd(cmul_bcast(g00r, g00i, av), cmul_bcast(g01r, g01i, bv));
        const __m256d nhi = _mm256_add_pd(cmul_bcast(g10r, g10i, av), cmul_bcast(g11r, g11i, bv));
        _mm256_storeu_pd(lo, nlo);
        _mm256_storeu_pd(hi, nhi);
      }
    }
    return;
  }
  // stride == 1: the pair sits in one register as [a, b].
  const __m256d row0 = _mm256_setr_pd(g[0], g[1], g[2], g[3]);
  const __m256d row1 = _mm256_setr_pd(g[4], g[5], g[6], g[7]);
  const __m256d row0s = _mm256_permute_pd(row0, 0b0101);
  const __m256d row1s = _mm256_permute_pd(row1, 0b0101);
  for (std::size_t base = 0; base < n; base += 2) {
    double* p = amps + 2 * base;
    const __m256d v = _mm256_loadu_pd(p);  // [ar, ai, br, bi]
    // Products g_r * v lane-wise as complex numbers.
    const __m256d vr = _mm256_movedup_pd(v);            // [ar, ar, br, br]
    const __m256d vi = _mm256_permute_pd(v, 0b1111);    // [ai, ai, bi, bi]
    const __m256d p0 = _mm256_fmaddsub_pd(vr, row0, _mm256_mul_pd(vi, row0s));
    const __m256d p1 = _mm256_fmaddsub_pd(vr, row1, _mm256_mul_pd(vi, row1s));
    double r0, i0, r1, i1;
    reduce_pairs(p0, &r0, &i0);
    reduce_pairs(p1, &r1, &i1);
    p[0] = r0;
    p[1] = i0;
    p[2] = r1;
    p[3] = i1;
  }
}

double norm_sq(std::size_t n, const double* x) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(x + 2 * i);
    const __m256d b = _mm256_loadu_pd(x + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double e, o;
  reduce_pairs(_mm256_add_pd(acc0, acc1), &e, &o);
  double s = e + o;
  for (std::size_t j = 2 * i; j < 2 * n; ++j) s += x[j] * x[j];
  return s;
}

constexpr KernelTable kAvx2Table{
    Isa::kAvx2, "avx2", &dotc, &dotu, &axpy, &gemm, &pair_update, &norm_sq,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2Table; }

}  // namespace qvl::kernels

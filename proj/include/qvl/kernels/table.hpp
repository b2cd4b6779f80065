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

#pragma once

// Function table shared by the scalar and vectorized kernel translation units.
// Kept free of <complex> so ISA-specific objects never instantiate shared
// inline templates.

#include <cstddef>

namespace qvl::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  /// out = sum_i conj(x_i) * y_i
  void (*dotc)(std::size_t n, const double* x, const double* y, double* out);
  /// out = sum_i x_i * y_i
  void (*dotu)(std::size_t n, const double* x, const double* y, double* out);
  /// y += a * x
  void (*axpy)(std::size_t n, const double* a, const double* x, double* y);
  /// c (m x n) += a (m x k) * b (k x n), all row-major and contiguous.
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b,
               double* c);
  /// For every pair (i, i + stride) with i in the lower half of its 2*stride
  /// block, apply the row-major 2x2 matrix g. n must be a multiple of 2*stride.
  void (*pair_update)(std::size_t n, std::size_t stride, const double* g, double* amps);
  /// sum_i |x_i|^2
  double (*norm_sq)(std::size_t n, const double* x);
};

}  // namespace qvl::kernels

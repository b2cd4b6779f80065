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

// Dense complex inner loops. Every kernel has a scalar reference version and,
// where the CPU supports it, a vectorized variant. The variant is chosen once
// at startup (see active()) and can be overridden with QMA_VERIFLAB_ISA=scalar.
//
// Complex arrays are passed as interleaved doubles (re, im, re, im, ...), which
// is the layout of std::complex<double> arrays.

#include <complex>
#include <cstddef>
#include <span>

#include "qvl/kernels/table.hpp"

namespace qvl::kernels {

using cplx = std::complex<double>;

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

// The table used by the library. First call picks the best supported ISA.
const KernelTable& active();

// Force a particular table (tests, benchmarks). Throws std::invalid_argument
// when the ISA is unavailable on this build or CPU.
void select(Isa isa);

const char* isa_name(Isa isa);

namespace detail {
inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }
}  // namespace detail

inline cplx dotc(std::span<const cplx> x, std::span<const cplx> y) {
  double out[2];
  active().dotc(x.size(), detail::raw(x.data()), detail::raw(y.data()), out);
  return {out[0], out[1]};
}

inline cplx dotu(std::span<const cplx> x, std::span<const cplx> y) {
  double out[2];
  active().dotu(x.size(), detail::raw(x.data()), detail::raw(y.data()), out);
  return {out[0], out[1]};
}

inline void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  const double coef[2] = {a.real(), a.imag()};
  active().axpy(x.size(), coef, detail::raw(x.data()), detail::raw(y.data()));
}

inline double norm_sq(std::span<const cplx> x) {
  return active().norm_sq(x.size(), detail::raw(x.data()));
}

}  // namespace qvl::kernels

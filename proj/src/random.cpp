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

#include "qvl/random.hpp"

#include "qvl/linalg.hpp"

namespace qvl {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (auto& x : g.data()) {
    const double re = normal(rng);
    const double im = normal(rng);
    x = cplx(re, im);
  }
  return g;
}

PureState haar_state(const SubsystemShape& shape, Rng& rng) {
  CMatrix g = ginibre(shape.total(), 1, rng);
  return PureState::normalized(CVector(g.data().begin(), g.data().end()), shape);
}

DensityMatrix wishart_density(const SubsystemShape& shape, Rng& rng, std::size_t rank) {
  const std::size_t n = shape.total();
  const CMatrix g = ginibre(n, rank == 0 ? n : rank, rng);
  CMatrix w = (g * g.adjoint()).hermitian_part();
  w *= 1.0 / w.trace().real();
  return DensityMatrix::assume_valid(std::move(w), shape);
}

UnitaryOperator haar_unitary(const SubsystemShape& shape, Rng& rng) {
  const std::size_t n = shape.total();
  return UnitaryOperator(linalg::qr_unitary(ginibre(n, n, rng)), shape);
}

}  // namespace qvl

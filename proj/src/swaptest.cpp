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

#include "qvl/swaptest.hpp"

#include <algorithm>

#include "qvl/circuit.hpp"
#include "qvl/errors.hpp"

namespace qvl {
namespace {

void require_local_dim(std::size_t d, const char* what) {
  if (d < 2) throw InvalidArgument(std::string(what) + ": local dimension must be >= 2");
}

double clamp_unit(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

CMatrix swap_operator(std::size_t d) {
  require_local_dim(d, "swap_operator");
  CMatrix s(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
  }
  return s;
}

HermitianOperator sym_projector(std::size_t d) {
  require_local_dim(d, "sym_projector");
  CMatrix p = CMatrix::identity(d * d) + swap_operator(d);
  p *= 0.5;
  return HermitianOperator(std::move(p), SubsystemShape::uniform(d, 2));
}

double swap_test_accept_prob(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.shape() != sigma.shape()) throw ShapeMismatch("swap_test_accept_prob: shape mismatch");
  return 0.5 + 0.5 * trace_of_product(rho.matrix(), sigma.matrix()).real();
}

double swap_test_accept_prob_joint(const DensityMatrix& omega) {
  const auto dims = omega.shape().dims();
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw ShapeMismatch("swap_test_accept_prob_joint: needs two equal factors, got " +
                        omega.shape().to_string());
  }
  return trace_of_product(sym_projector(dims[0]).matrix(), omega.matrix()).real();
}

CswapRun cswap_circuit(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.shape() != sigma.shape()) throw ShapeMismatch("cswap_circuit: shape mismatch");
  const std::size_t d = rho.dim();
  const PureState phi = purify(rho);    // R1 (x) S1
  const PureState psi = purify(sigma);  // R2 (x) S2

  // Registers: 0 = B, 1 = R1, 2 = S1, 3 = R2, 4 = S2.
  const SubsystemShape shape({2, d, d, d, d});
  CVector state = kron(CVector{1.0, 0.0}, kron(phi.amplitudes(), psi.amplitudes()));

  circuit::Circuit c(shape);
  c.gate({0}, circuit::hadamard())
      .swap(1, 3, circuit::Condition{{{0, 1}}, {}})
      .gate({0}, circuit::hadamard());
  c.run(state);

  const double accept = clamp_unit(circuit::probability(state, shape, 0, 0));
  return {accept, PureState::normalized(std::move(state), shape)};
}

CswapRun cswap_circuit_direct(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.shape() != sigma.shape()) throw ShapeMismatch("cswap_circuit_direct: shape mismatch");
  const std::size_t d = rho.dim();
  const SubsystemShape shape({2, d, d});
  circuit::Circuit c(shape);
  c.gate({0}, circuit::hadamard())
      .swap(1, 2, circuit::Condition{{{0, 1}}, {}})
      .gate({0}, circuit::hadamard());
  const CMatrix w = c.unitary();

  CMatrix b0(2, 2);
  b0(0, 0) = 1.0;
  const CMatrix input = kron(b0, kron(rho.matrix(), sigma.matrix()));
  const CMatrix out = (w * input * w.adjoint()).hermitian_part();

  double accept = 0.0;
  const std::size_t half = d * d;
  for (std::size_t i = 0; i < half; ++i) accept += out(i, i).real();
  return {clamp_unit(accept), DensityMatrix::assume_valid(out, shape)};
}

Povm decomposability_povm(std::size_t d) {
  require_local_dim(d, "decomposability_povm");
  const SubsystemShape shape = SubsystemShape::uniform(d, 4);
  const CMatrix accept = kron(CMatrix::identity(d * d), sym_projector(d).matrix());
  return Povm::binary(HermitianOperator(accept, shape));
}

}  // namespace qvl

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

// Controlled-swap test: closed form, circuit simulation (purified and direct
// density-matrix runs), the symmetric-subspace projector and the two-outcome
// measurement {I (x) I (x) P_sym, complement} on four copies of a space.

#include <variant>

#include "qvl/measure.hpp"
#include "qvl/qstate.hpp"

namespace qvl {

/// Projector onto the symmetric subspace of C^d (x) C^d, (I + SWAP) / 2.
HermitianOperator sym_projector(std::size_t d);

/// Operator exchanging the two factors of C^d (x) C^d.
CMatrix swap_operator(std::size_t d);

/// 1/2 + tr(rho sigma) / 2
double swap_test_accept_prob(const DensityMatrix& rho, const DensityMatrix& sigma);

/// tr(P_sym omega) for a joint state on two equal factors.
double swap_test_accept_prob_joint(const DensityMatrix& omega);

struct CswapRun {
  double accept_probability;
  /// Purified run: state on B (x) R1 (x) S1 (x) R2 (x) S2 before measuring B.
  /// Direct run: density matrix on B (x) R1 (x) R2 before measuring B.
  std::variant<PureState, DensityMatrix> pre_measurement_state;
};

/// Hadamard on B, swap R1 <-> R2 controlled on B, Hadamard on B, applied to
/// |0> (x) purify(rho) (x) purify(sigma). Acceptance is P(B = 0).
CswapRun cswap_circuit(const DensityMatrix& rho, const DensityMatrix& sigma);

/// The same three gates applied as W (|0><0| (x) rho (x) sigma) W^dagger.
CswapRun cswap_circuit_direct(const DensityMatrix& rho, const DensityMatrix& sigma);

/// {I (x) I (x) P_sym, I - I (x) I (x) P_sym} on (C^d)^(x)4.
Povm decomposability_povm(std::size_t d);

}  // namespace qvl

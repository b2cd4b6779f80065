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

// Seeded generators for test states. Pure states are Haar distributed,
// mixed states come from normalized Wishart matrices G G^dagger / tr,
// unitaries from the phase-corrected QR of a Ginibre matrix.

#include <cstdint>
#include <random>

#include "qvl/qstate.hpp"

namespace qvl {

using Rng = std::mt19937_64;

/// splitmix64 step; gives independent child seeds for restarts and trials.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Matrix of i.i.d. standard complex Gaussians.
CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

PureState haar_state(const SubsystemShape& shape, Rng& rng);

/// rank == 0 means full rank.
DensityMatrix wishart_density(const SubsystemShape& shape, Rng& rng, std::size_t rank = 0);

UnitaryOperator haar_unitary(const SubsystemShape& shape, Rng& rng);

}  // namespace qvl

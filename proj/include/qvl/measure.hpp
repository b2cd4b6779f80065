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

// POVMs, outcome statistics, seeded sampling and two-state (Helstrom)
// discrimination with equal priors.

#include <cstdint>
#include <vector>

#include "qvl/interchange.hpp"
#include "qvl/qstate.hpp"
#include "qvl/random.hpp"

namespace qvl {

class Povm {
 public:
  /// Every element PSD within 1e-9 and the elements sum to I within 1e-9
  /// (Frobenius).
  explicit Povm(std::vector<HermitianOperator> elements);

  /// {P, I - P} for a Hermitian 0 <= P <= I.
  static Povm binary(const HermitianOperator& accept);

  const std::vector<HermitianOperator>& elements() const { return elements_; }
  const HermitianOperator& operator[](std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }
  const SubsystemShape& shape() const { return elements_.front().shape(); }

 private:
  std::vector<HermitianOperator> elements_;
};

class OutcomeDistribution {
 public:
  /// Entries in [-1e-10, 1 + 1e-10], total 1 within 1e-9. Small negatives are
  /// set to 0 and the vector renormalized.
  explicit OutcomeDistribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return probabilities_; }
  double operator[](std::size_t i) const { return probabilities_.at(i); }
  std::size_t size() const { return probabilities_.size(); }

  /// Inverse-CDF draw given u in [0, 1).
  std::size_t pick(double u) const;

 private:
  std::vector<double> probabilities_;
};

/// tr(M_i rho) for every element.
OutcomeDistribution outcome_probabilities(const Povm& m, const DensityMatrix& rho);

/// Same statistics for a pure state, <psi|M_i|psi>.
OutcomeDistribution outcome_probabilities(const Povm& m, const PureState& psi);

/// One outcome drawn with probability tr(M_i rho); deterministic in seed.
std::size_t sample_outcome(const Povm& m, const DensityMatrix& rho, std::uint64_t seed);

struct HelstromResult {
  double success;  // 1/2 + (1/2) * trace_norm_half(rho0 - rho1)
  Povm povm;       // {projector onto positive part of rho0 - rho1, complement}
};

HelstromResult helstrom_optimal_success(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// Equal-prior success of guessing "0" on outcome 0 and "1" on outcome 1.
double binary_guessing_success(const Povm& m, const DensityMatrix& rho0, const DensityMatrix& rho1);

/// Random binary POVM {U diag(l) U^dagger, I - ...} with l uniform in [0, 1].
Povm random_binary_povm(const SubsystemShape& shape, Rng& rng);

/// Random n-outcome POVM S^{-1/2} A_i S^{-1/2} with A_i Wishart and S = sum A_i.
Povm random_povm(const SubsystemShape& shape, std::size_t outcomes, Rng& rng);

io::json to_json(const Povm& m);
Povm povm_from_json(const io::json& j);

}  // namespace qvl

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

// Product versus maximally entangled states on H (x) H. The uniform mixture
// of the computational product basis and the uniform mixture of the
// generalized Bell basis are both I/d^2, so no measurement tells the two
// ensembles apart better than a coin flip.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qvl/interchange.hpp"
#include "qvl/measure.hpp"
#include "qvl/qstate.hpp"

namespace qvl {

class StateEnsemble {
 public:
  /// Weights nonnegative and summing to 1 within 1e-12; all states share a shape.
  StateEnsemble(std::vector<PureState> states, std::vector<double> weights);

  const std::vector<PureState>& states() const { return states_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return states_.size(); }
  const SubsystemShape& shape() const { return states_.front().shape(); }

 private:
  std::vector<PureState> states_;
  std::vector<double> weights_;
};

/// g_{n,m} = d^{-1/2} sum_j w^{jn} |j>|j+m mod d>, w = exp(2 pi i / d),
/// listed with index n * d + m.
std::vector<PureState> bell_basis(std::size_t d);

/// sum_i w_i |psi_i><psi_i|
DensityMatrix ensemble_average(const StateEnsemble& e);

/// Uniform over |i>|j>.
StateEnsemble product_mixture(std::size_t d);
/// Uniform over the generalized Bell basis.
StateEnsemble bell_mixture(std::size_t d);

struct GameReport {
  std::size_t d;
  std::size_t trials;
  std::uint64_t seed;
  std::string strategy_id;
  double empirical_success;
  double analytic_success;
  /// Binomial standard deviation of the empirical rate around 1/2.
  double sigma;
};

/// Each trial picks i in {0, 1} uniformly, a state from the product (i = 0)
/// or Bell (i = 1) ensemble, and measures `strategy`; a trial succeeds when
/// the outcome equals i. Requires a binary POVM on C^d (x) C^d.
GameReport discrimination_game(std::size_t d, std::size_t trials, std::uint64_t seed,
                               const Povm& strategy, std::string strategy_id = "custom");

/// (1/2)(tr(M_0 avg_0) + tr(M_1 avg_1)) for the two ensembles.
double analytic_game_success(std::size_t d, const Povm& strategy);

/// min over the Bell basis of 1 - max_product_fidelity; d must be a power of 2.
double epsilon_range_check(std::size_t d);

io::json to_json(const GameReport& g);

}  // namespace qvl

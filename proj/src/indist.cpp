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

#include "qvl/indist.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qvl/errors.hpp"
#include "qvl/random.hpp"

namespace qvl {
namespace {

void check_local_dim(std::size_t d, const char* what) {
  if (d < 2) throw InvalidArgument(std::string(what) + ": local dimension must be >= 2");
}

StateEnsemble uniform(std::vector<PureState> states) {
  const std::size_t n = states.size();
  return StateEnsemble(std::move(states), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

// Uniform double in [0, 1) from one splitmix64 output.
double unit(std::uint64_t seed, std::uint64_t stream) {
  return static_cast<double>(derive_seed(seed, stream) >> 11) * 0x1.0p-53;
}

}  // namespace

StateEnsemble::StateEnsemble(std::vector<PureState> states, std::vector<double> weights)
    : states_(std::move(states)), weights_(std::move(weights)) {
  if (states_.empty() || states_.size() != weights_.size()) {
    throw InvariantViolation("StateEnsemble: need one weight per state and at least one state");
  }
  for (const PureState& s : states_) {
    if (s.shape() != states_.front().shape()) throw ShapeMismatch("StateEnsemble: mixed shapes");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InvariantViolation("StateEnsemble: negative weight");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw InvariantViolation("StateEnsemble: weights do not sum to 1");
}

std::vector<PureState> bell_basis(std::size_t d) {
  check_local_dim(d, "bell_basis");
  const SubsystemShape shape({d, d});
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<PureState> out;
  out.reserve(d * d);
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t m = 0; m < d; ++m) {
      CVector v(d * d);
      for (std::size_t j = 0; j < d; ++j) {
        // Reduce jn mod d first so the phase argument stays small.
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * n) % d) / static_cast<double>(d);
        v[j * d + (j + m) % d] = std::polar(amp, angle);
      }
      out.emplace_back(std::move(v), shape);
    }
  }
  return out;
}

DensityMatrix ensemble_average(const StateEnsemble& e) {
  const std::size_t dim = e.shape().total();
  CMatrix acc(dim, dim);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto amps = e.states()[i].amplitudes();
    const double w = e.weights()[i];
    for (std::size_t r = 0; r < dim; ++r) {
      if (amps[r] == cplx{}) continue;
      const cplx a = w * amps[r];
      for (std::size_t c = 0; c < dim; ++c) acc(r, c) += a * std::conj(amps[c]);
    }
  }
  return DensityMatrix(std::move(acc), e.shape());
}

StateEnsemble product_mixture(std::size_t d) {
  check_local_dim(d, "product_mixture");
  const SubsystemShape shape({d, d});
  std::vector<PureState> states;
  for (std::size_t i = 0; i < d * d; ++i) states.push_back(PureState::basis(shape, i));
  return uniform(std::move(states));
}

StateEnsemble bell_mixture(std::size_t d) { return uniform(bell_basis(d)); }

double analytic_game_success(std::size_t d, const Povm& strategy) {
  if (strategy.size() != 2) throw InvalidArgument("discrimination game needs a binary POVM");
  const DensityMatrix avg0 = ensemble_average(product_mixture(d));
  const DensityMatrix avg1 = ensemble_average(bell_mixture(d));
  return binary_guessing_success(strategy, avg0, avg1);
}

GameReport discrimination_game(std::size_t d, std::size_t trials, std::uint64_t seed,
                               const Povm& strategy, std::string strategy_id) {
  check_local_dim(d, "discrimination_game");
  if (trials == 0) throw InvalidArgument("discrimination_game: trials must be >= 1");
  if (strategy.size() != 2) throw InvalidArgument("discrimination_game: strategy must be a binary POVM");
  if (strategy.shape().total() != d * d) {
    throw ShapeMismatch("discrimination_game: POVM does not act on C^d (x) C^d");
  }

  // P(outcome 0 | state) for every state of both ensembles.
  const StateEnsemble ens[2] = {product_mixture(d), bell_mixture(d)};
  std::vector<double> p0[2];
  for (int i = 0; i < 2; ++i) {
    for (const PureState& s : ens[i].states()) p0[i].push_back(outcome_probabilities(strategy, s)[0]);
  }

  const std::size_t n = d * d;
  std::size_t wins = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t ts = derive_seed(seed, t);
    const int i = unit(ts, 0) < 0.5 ? 0 : 1;
    const std::size_t pick = std::min(n - 1, static_cast<std::size_t>(unit(ts, 1) * static_cast<double>(n)));
    const int outcome = unit(ts, 2) < p0[i][pick] ? 0 : 1;
    if (outcome == i) ++wins;
  }

  GameReport g;
  g.d = d;
  g.trials = trials;
  g.seed = seed;
  g.strategy_id = std::move(strategy_id);
  g.empirical_success = static_cast<double>(wins) / static_cast<double>(trials);
  g.analytic_success = analytic_game_success(d, strategy);
  g.sigma = std::sqrt(0.25 / static_cast<double>(trials));
  return g;
}

double epsilon_range_check(std::size_t d) {
  if (d < 2 || (d & (d - 1)) != 0) throw InvalidArgument("epsilon_range_check: d must be a power of 2");
  double best = 1.0;
  for (const PureState& g : bell_basis(d)) best = std::min(best, 1.0 - max_product_fidelity(g));
  return best;
}

io::json to_json(const GameReport& g) {
  return {{"d", g.d},
          {"trials", g.trials},
          {"seed", g.seed},
          {"strategy_id", g.strategy_id},
          {"empirical_success", g.empirical_success},
          {"analytic_success", g.analytic_success},
          {"sigma", g.sigma}};
}

}  // namespace qvl

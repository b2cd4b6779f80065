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

// Product-certificate optimizers: seesaw (alternating top-eigenvector
// updates) and the grid oracle used to cross-check it.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qvl/errors.hpp"
#include "qvl/linalg.hpp"
#include "qvl/random.hpp"
#include "qvl/verifier.hpp"

namespace qvl {
namespace {

struct RestartOutcome {
  double value;
  std::vector<CVector> factors;
  bool converged;
  std::vector<double> history;
};

double product_value(const AcceptanceOperator& pi, const std::vector<CVector>& factors) {
  CVector joint = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) joint = kron(joint, factors[i]);
  return pi.op().expectation(joint);
}

RestartOutcome run_restart(const AcceptanceOperator& pi, std::vector<CVector> factors,
                           const SeesawConfig& cfg) {
  RestartOutcome out{product_value(pi, factors), {}, false, {}};
  double previous = out.value;
  for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    double current = previous;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      auto [lambda, vec] = linalg::top_eigenpair(contract_all_but(pi, factors, j));
      // Keep the old factor when the eigensolver cannot improve on it.
      if (lambda >= current) {
        factors[j] = std::move(vec);
        current = lambda;
      }
    }
    out.history.push_back(current);
    const double gain = current - previous;
    previous = current;
    if (gain < cfg.convergence_tol) {
      out.converged = true;
      break;
    }
  }
  out.value = product_value(pi, factors);
  out.factors = std::move(factors);
  return out;
}

std::vector<CVector> random_factors(const SubsystemShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CVector> f;
  for (std::size_t d : shape.dims()) {
    f.push_back(haar_state(SubsystemShape({d}), rng).amplitudes());
  }
  return f;
}

// Per-factor top eigenvectors of the reduced states of the entangled optimum.
std::vector<CVector> factors_from_entangled(const AcceptanceOperator& pi) {
  const EntangledOptimum best = best_entangled_value(pi);
  const DensityMatrix rho = best.state.density();
  std::vector<CVector> f;
  for (std::size_t j = 0; j < pi.shape().count(); ++j) {
    const std::size_t keep[] = {j};
    const DensityMatrix reduced = partial_trace(rho, keep);
    f.push_back(linalg::top_eigenpair(reduced.matrix()).second);
  }
  return f;
}

double max_eig_small(const CMatrix& m) {
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half = 0.5 * (a - d);
    return 0.5 * (a + d) + std::sqrt(half * half + std::norm(m(0, 1)));
  }
  return linalg::max_eigenvalue(m);
}

std::size_t checked_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a) return static_cast<std::size_t>(-1);
  return a * b;
}

std::size_t outer_grid_size(const SubsystemShape& shape, std::size_t resolution) {
  std::size_t total = 1;
  for (std::size_t i = 0; i + 1 < shape.count(); ++i) {
    total = checked_product(total, grid_points_per_factor(shape.dim(i), resolution));
  }
  return total;
}

}  // namespace

void SeesawConfig::validate() const {
  if (restarts == 0 || max_sweeps == 0 || !(convergence_tol > 0.0)) {
    throw InvariantViolation("SeesawConfig: restarts, max_sweeps and convergence_tol must be positive");
  }
}

CMatrix contract_all_but(const AcceptanceOperator& pi, const std::vector<CVector>& factors,
                         std::size_t j) {
  const SubsystemShape& shape = pi.shape();
  if (factors.size() != shape.count() || j >= shape.count()) {
    throw ShapeMismatch("contract_all_but: factor count mismatch");
  }
  const std::size_t dj = shape.dim(j);
  const std::vector<std::size_t> strides = shape.strides();
  const std::size_t n = shape.total();
  // T = c_1 (x) ... (x) I_j (x) ... (x) c_k, an n x dj isometry.
  CMatrix t(n, dj);
  for (std::size_t flat = 0; flat < n; ++flat) {
    cplx w = 1.0;
    for (std::size_t i = 0; i < shape.count(); ++i) {
      if (i == j) continue;
      w *= factors[i][(flat / strides[i]) % shape.dim(i)];
    }
    t(flat, (flat / strides[j]) % dj) = w;
  }
  return (adjoint_times(t, pi.matrix() * t)).hermitian_part();
}

SeesawResult best_product_value_seesaw(const AcceptanceOperator& pi, const SeesawConfig& cfg) {
  cfg.validate();
  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(cfg.restarts + 1);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    outcomes.push_back(run_restart(pi, random_factors(pi.shape(), derive_seed(cfg.seed, r)), cfg));
  }
  outcomes.push_back(run_restart(pi, factors_from_entangled(pi), cfg));

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  RestartOutcome& win = outcomes[best];
  std::vector<PureState> certs;
  for (std::size_t i = 0; i < win.factors.size(); ++i) {
    certs.push_back(PureState::normalized(std::move(win.factors[i]),
                                          SubsystemShape({pi.shape().dim(i)})));
  }
  return SeesawResult{win.value,          CertificateSet(std::move(certs)), win.converged,
                      win.history.size(), std::move(win.history),           best};
}

std::size_t grid_points_per_factor(std::size_t d, std::size_t resolution) {
  std::size_t n = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    n = checked_product(n, resolution + 1);
    n = checked_product(n, 2 * resolution);
  }
  return n;
}

std::vector<CVector> factor_grid(std::size_t d, std::size_t resolution) {
  if (d < 2 || resolution < 1) throw InvalidArgument("factor_grid: need d >= 2 and resolution >= 1");
  const std::size_t total = grid_points_per_factor(d, resolution);
  const std::size_t angles = d - 1;
  const double mag_step = (std::numbers::pi / 2.0) / static_cast<double>(resolution);
  const double phase_step = std::numbers::pi / static_cast<double>(resolution);
  std::vector<CVector> grid;
  grid.reserve(total);
  std::vector<std::size_t> mag(angles, 0), ph(angles, 0);
  for (std::size_t g = 0; g < total; ++g) {
    std::size_t rest = g;
    for (std::size_t a = 0; a < angles; ++a) {
      mag[a] = rest % (resolution + 1);
      rest /= resolution + 1;
      ph[a] = rest % (2 * resolution);
      rest /= 2 * resolution;
    }
    // Hyperspherical magnitudes; component i > 0 carries phase ph[i-1].
    CVector v(d);
    double sin_prod = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      double m = sin_prod;
      if (i < angles) {
        const double chi = mag_step * static_cast<double>(mag[i]);
        m *= std::cos(chi);
        sin_prod *= std::sin(chi);
      }
      const double phi = i == 0 ? 0.0 : phase_step * static_cast<double>(ph[i - 1]);
      v[i] = std::polar(m, phi);
    }
    grid.push_back(std::move(v));
  }
  return grid;
}

double brute_force_product_value(const AcceptanceOperator& pi, const BruteForceConfig& cfg) {
  const SubsystemShape& shape = pi.shape();
  const std::size_t k = shape.count();
  if (k == 1) return linalg::max_eigenvalue(pi.matrix());

  std::size_t resolution = cfg.resolution;
  if (resolution == 0) {
    for (std::size_t r = 64; r >= 1; --r) {
      if (outer_grid_size(shape, r) <= cfg.budget) {
        resolution = r;
        break;
      }
    }
    if (resolution == 0) {
      throw BudgetExceeded("brute_force_product_value: even the coarsest grid exceeds the budget of " +
                           std::to_string(cfg.budget) + " points");
    }
  } else if (outer_grid_size(shape, resolution) > cfg.budget) {
    throw BudgetExceeded("brute_force_product_value: resolution " + std::to_string(resolution) +
                         " needs " + std::to_string(outer_grid_size(shape, resolution)) +
                         " grid points, budget is " + std::to_string(cfg.budget));
  }

  std::vector<std::vector<CVector>> grids;
  for (std::size_t i = 0; i + 1 < k; ++i) grids.push_back(factor_grid(shape.dim(i), resolution));

  const std::size_t dl = shape.dim(k - 1);
  const std::size_t douter = shape.total() / dl;
  const CMatrix& p = pi.matrix();
  std::vector<std::size_t> idx(k - 1, 0);
  CVector w;
  CMatrix m(dl, dl);
  double best = 0.0;
  bool first = true;
  while (true) {
    w = grids[0][idx[0]];
    for (std::size_t i = 1; i + 1 < k; ++i) w = kron(w, grids[i][idx[i]]);
    std::fill(m.data().begin(), m.data().end(), cplx{});
    for (std::size_t a = 0; a < douter; ++a) {
      if (w[a] == cplx{}) continue;
      const cplx ca = std::conj(w[a]);
      for (std::size_t b = 0; b < douter; ++b) {
        if (w[b] == cplx{}) continue;
        const cplx c = ca * w[b];
        for (std::size_t x = 0; x < dl; ++x) {
          const cplx* row = &p(a * dl + x, b * dl);
          for (std::size_t y = 0; y < dl; ++y) m(x, y) += c * row[y];
        }
      }
    }
    const double value = max_eig_small(m);
    if (first || value > best) {
      best = value;
      first = false;
    }
    std::size_t i = 0;
    for (; i + 1 < k; ++i) {
      if (++idx[i] < grids[i].size()) break;
      idx[i] = 0;
    }
    if (i + 1 == k) break;
  }
  return best;
}

}  // namespace qvl

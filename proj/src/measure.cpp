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

#include "qvl/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qvl/errors.hpp"
#include "qvl/linalg.hpp"
#include "qvl/tolerance.hpp"

namespace qvl {

Povm::Povm(std::vector<HermitianOperator> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvariantViolation("Povm: no elements");
  const SubsystemShape& shape = elements_.front().shape();
  CMatrix sum(shape.total(), shape.total());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].shape() != shape) throw ShapeMismatch("Povm: elements have different shapes");
    const linalg::EigenSystem es = linalg::eigh(elements_[i].matrix());
    if (es.values.back() < -tol::kAlgebra) {
      throw InvariantViolation("Povm: element " + std::to_string(i) +
                               " is not positive semidefinite within 1e-9");
    }
    sum += elements_[i].matrix();
  }
  sum -= CMatrix::identity(shape.total());
  if (sum.frobenius_norm() > tol::kAlgebra) {
    throw InvariantViolation("Povm: elements do not sum to identity within 1e-9");
  }
}

Povm Povm::binary(const HermitianOperator& accept) {
  const HermitianOperator rest = HermitianOperator::identity(accept.shape()) - accept;
  return Povm({accept, rest});
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw InvariantViolation("OutcomeDistribution: empty");
  bool clamped = false;
  for (double& p : probabilities_) {
    if (p < -tol::kConstruct || p > 1.0 + tol::kConstruct || !std::isfinite(p)) {
      throw InvariantViolation("OutcomeDistribution: probability " + std::to_string(p) +
                               " outside [-1e-10, 1 + 1e-10]");
    }
    if (p < 0.0) {
      p = 0.0;
      clamped = true;
    }
    if (p > 1.0) p = 1.0;
  }
  const double total = std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
  if (std::abs(total - 1.0) > tol::kAlgebra) {
    throw InvariantViolation("OutcomeDistribution: probabilities sum to " + std::to_string(total));
  }
  if (clamped) {
    for (double& p : probabilities_) p /= total;
  }
}

std::size_t OutcomeDistribution::pick(double u) const {
  double cdf = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    cdf += probabilities_[i];
    if (u < cdf) return i;
  }
  // u landed in the rounding gap above the last partial sum.
  for (std::size_t i = probabilities_.size(); i-- > 0;) {
    if (probabilities_[i] > 0.0) return i;
  }
  return probabilities_.size() - 1;
}

OutcomeDistribution outcome_probabilities(const Povm& m, const DensityMatrix& rho) {
  if (m.shape() != rho.shape()) throw ShapeMismatch("outcome_probabilities: shape mismatch");
  std::vector<double> p;
  p.reserve(m.size());
  for (const HermitianOperator& e : m.elements()) {
    p.push_back(trace_of_product(e.matrix(), rho.matrix()).real());
  }
  return OutcomeDistribution(std::move(p));
}

OutcomeDistribution outcome_probabilities(const Povm& m, const PureState& psi) {
  if (m.shape() != psi.shape()) throw ShapeMismatch("outcome_probabilities: shape mismatch");
  std::vector<double> p;
  p.reserve(m.size());
  for (const HermitianOperator& e : m.elements()) p.push_back(e.expectation(psi.amplitudes()));
  return OutcomeDistribution(std::move(p));
}

std::size_t sample_outcome(const Povm& m, const DensityMatrix& rho, std::uint64_t seed) {
  const OutcomeDistribution dist = outcome_probabilities(m, rho);
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  return dist.pick(uniform(rng));
}

HelstromResult helstrom_optimal_success(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0.shape() != rho1.shape()) throw ShapeMismatch("helstrom: shape mismatch");
  const HermitianOperator diff = rho0 - rho1;
  const linalg::EigenSystem es = linalg::eigh(diff.matrix());
  const std::size_t n = rho0.dim();
  CMatrix positive(n, n);
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    abs_sum += std::abs(es.values[i]);
    if (es.values[i] <= 0.0) continue;
    const CVector v = es.vectors.column(i);
    positive += CMatrix::projector(v);
  }
  const double success = 0.5 + 0.5 * (0.5 * abs_sum);
  return {success, Povm::binary(HermitianOperator(positive.hermitian_part(), rho0.shape()))};
}

double binary_guessing_success(const Povm& m, const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (m.size() != 2) throw InvalidArgument("binary_guessing_success: POVM must have 2 outcomes");
  return 0.5 * (outcome_probabilities(m, rho0)[0] + outcome_probabilities(m, rho1)[1]);
}

Povm random_binary_povm(const SubsystemShape& shape, Rng& rng) {
  const UnitaryOperator u = haar_unitary(shape, rng);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> diag(shape.total());
  for (double& x : diag) x = uniform(rng);
  const CMatrix m = u.matrix() * CMatrix::diagonal(diag) * u.matrix().adjoint();
  return Povm::binary(HermitianOperator(m.hermitian_part(), shape));
}

Povm random_povm(const SubsystemShape& shape, std::size_t outcomes, Rng& rng) {
  if (outcomes < 1) throw InvalidArgument("random_povm: need at least one outcome");
  const std::size_t n = shape.total();
  std::vector<CMatrix> parts;
  CMatrix sum(n, n);
  for (std::size_t i = 0; i < outcomes; ++i) {
    const CMatrix g = ginibre(n, n, rng);
    parts.push_back((g * g.adjoint()).hermitian_part());
    sum += parts.back();
  }
  const CMatrix inv_sqrt = linalg::psd_function(
      sum, [](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; }, "random_povm");
  std::vector<HermitianOperator> elements;
  for (std::size_t i = 0; i < outcomes; ++i) {
    elements.emplace_back((inv_sqrt * parts[i] * inv_sqrt).hermitian_part(), shape);
  }
  // Push the rounding residue of sum_i M_i - I into the last element.
  CMatrix residue = CMatrix::identity(n);
  for (const auto& e : elements) residue -= e.matrix();
  elements.back() = HermitianOperator((elements.back().matrix() + residue).hermitian_part(), shape);
  return Povm(std::move(elements));
}

io::json to_json(const Povm& m) {
  io::json arr = io::json::array();
  for (const auto& e : m.elements()) arr.push_back(io::to_json(e));
  return arr;
}

Povm povm_from_json(const io::json& j) {
  if (!j.is_array()) throw InvalidArgument("povm: expected a JSON list of matrices");
  std::vector<HermitianOperator> elements;
  for (const auto& e : j) elements.push_back(io::hermitian_from_json(e));
  return Povm(std::move(elements));
}

}  // namespace qvl

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

#include <gtest/gtest.h>

#include "qvl/circuit.hpp"
#include "qvl/errors.hpp"
#include "qvl/linalg.hpp"
#include "qvl/random.hpp"
#include "qvl/verifier.hpp"
#include "test_support.hpp"

namespace qvl {
namespace {

using testing::ket;
using testing::ket0;
using testing::ket1;
using testing::ket_plus;
using testing::kInvSqrt2;
using testing::max_abs;

// q_v = q_m = k = 1 circuits on two qubits: [private, certificate].
VerifierSpec two_qubit_verifier(const CMatrix& u) {
  return VerifierSpec(1, 1, 1, UnitaryOperator(u, SubsystemShape::qubits(2)), 0);
}

VerifierSpec cnot_verifier() {
  circuit::Circuit c(SubsystemShape::qubits(2));
  c.gate({0}, circuit::pauli_x(), circuit::Condition{{{1, 1}}, {}});
  return two_qubit_verifier(c.unitary());
}

AcceptanceOperator bell_projector() {
  const CVector b{0.0, kInvSqrt2, kInvSqrt2, 0.0};
  return AcceptanceOperator(HermitianOperator(CMatrix::outer(b, b), SubsystemShape::qubits(2)));
}

AcceptanceOperator random_pi(std::size_t k, Rng& rng) {
  const VerifierSpec v(k, 1, 1, haar_unitary(SubsystemShape::qubits(1 + k), rng), 0);
  return acceptance_operator(v);
}

TEST(VerifierSpec, invariants) {
  const UnitaryOperator id = UnitaryOperator::identity(SubsystemShape::qubits(3));
  EXPECT_NO_THROW(VerifierSpec(2, 1, 1, id, 0));
  EXPECT_THROW(VerifierSpec(2, 1, 2, id, 0), Error);  // wrong dimension
  EXPECT_THROW(VerifierSpec(2, 1, 1, id, 1), Error);  // output outside private block
  EXPECT_THROW(VerifierSpec(0, 1, 3, id, 0), Error);
}

TEST(AcceptanceOperator, examples) {
  const AcceptanceOperator never = acceptance_operator(two_qubit_verifier(CMatrix::identity(4)));
  EXPECT_LE(max_abs(never.matrix()), 1e-15);

  const CMatrix x_on_out = kron(circuit::pauli_x(), CMatrix::identity(2));
  const AcceptanceOperator always = acceptance_operator(two_qubit_verifier(x_on_out));
  EXPECT_LE(max_abs_diff(always.matrix(), CMatrix::identity(2)), 1e-15);

  const AcceptanceOperator cnot = acceptance_operator(cnot_verifier());
  EXPECT_LE(max_abs_diff(cnot.matrix(), CMatrix{{0, 0}, {0, 1}}), 1e-15);

  EXPECT_THROW(AcceptanceOperator(HermitianOperator(CMatrix{{2, 0}, {0, 0}}, SubsystemShape({2}))),
               InvariantViolation);
}

TEST(AcceptProbability, examples) {
  const CMatrix x_on_out = kron(circuit::pauli_x(), CMatrix::identity(2));
  Rng rng(1);
  EXPECT_NEAR(accept_probability(two_qubit_verifier(x_on_out),
                                 CertificateSet({haar_state(SubsystemShape({2}), rng)})),
              1.0, 1e-12);
  const VerifierSpec v = cnot_verifier();
  EXPECT_NEAR(accept_probability(v, CertificateSet({ket1()})), 1.0, 1e-12);
  EXPECT_NEAR(accept_probability(v, CertificateSet({ket0()})), 0.0, 1e-12);
  EXPECT_NEAR(accept_probability(v, CertificateSet({ket_plus()})), 0.5, 1e-12);
  EXPECT_THROW(accept_probability(v, CertificateSet({ket0(), ket0()})), ShapeMismatch);
}

TEST(AcceptProbability, circuit_and_operator_agree) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 1 + t % 3;
    const VerifierSpec v(k, 1, 2, haar_unitary(SubsystemShape::qubits(2 + k), rng), t % 2);
    const AcceptanceOperator pi = acceptance_operator(v);
    std::vector<PureState> certs;
    for (std::size_t i = 0; i < k; ++i) certs.push_back(haar_state(SubsystemShape({2}), rng));
    const CertificateSet c(std::move(certs));
    const double p = accept_probability(v, c);
    EXPECT_NEAR(p, product_expectation(pi, c), 1e-10);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(AcceptanceOperator, respects_certificate_locality) {
  Rng rng(3);
  const std::size_t k = 2;
  const SubsystemShape all = SubsystemShape::qubits(1 + k);
  const CMatrix u = haar_unitary(all, rng).matrix();
  const CMatrix v1 = haar_unitary(SubsystemShape({2}), rng).matrix();
  const CMatrix v2 = haar_unitary(SubsystemShape({2}), rng).matrix();
  const CMatrix local = kron(v1, v2);
  const AcceptanceOperator pi = acceptance_operator(VerifierSpec(k, 1, 1, UnitaryOperator(u, all), 0));
  const CMatrix moved = u * kron(CMatrix::identity(2), local);
  const AcceptanceOperator pi2 = acceptance_operator(VerifierSpec(k, 1, 1, UnitaryOperator(moved, all), 0));
  EXPECT_LE(max_abs_diff(local.adjoint() * pi.matrix() * local, pi2.matrix()), 1e-10);
}

TEST(BestEntangledValue, examples) {
  const SubsystemShape s = SubsystemShape::qubits(2);
  EXPECT_NEAR(best_entangled_value(AcceptanceOperator(HermitianOperator::identity(s))).value, 1.0, 1e-12);
  EXPECT_NEAR(best_entangled_value(AcceptanceOperator(HermitianOperator::zero(s))).value, 0.0, 1e-12);
  const double d[] = {0.3, 0.9, 0.1, 0.5};
  const auto best = best_entangled_value(AcceptanceOperator(HermitianOperator(CMatrix::diagonal(d), s)));
  EXPECT_NEAR(best.value, 0.9, 1e-12);
  EXPECT_NEAR(std::abs(best.state.amplitudes()[1]), 1.0, 1e-12);
}

TEST(Seesaw, config_validation) {
  SeesawConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), InvariantViolation);
  cfg = {};
  cfg.convergence_tol = 0.0;
  EXPECT_THROW(cfg.validate(), InvariantViolation);
}

TEST(Seesaw, single_factor_is_exact) {
  Rng rng(4);
  const AcceptanceOperator pi = acceptance_operator(
      VerifierSpec(1, 2, 1, haar_unitary(SubsystemShape::qubits(3), rng), 0));
  EXPECT_NEAR(best_product_value_seesaw(pi, {}).value, best_entangled_value(pi).value, 1e-10);
}

TEST(Seesaw, product_operator_gives_product_of_top_eigenvalues) {
  Rng rng(5);
  const DensityMatrix a = wishart_density(SubsystemShape({2}), rng);
  const DensityMatrix b = wishart_density(SubsystemShape({3}), rng);
  const AcceptanceOperator pi(tensor_product(HermitianOperator(a), HermitianOperator(b)));
  const double expect = linalg::max_eigenvalue(a.matrix()) * linalg::max_eigenvalue(b.matrix());
  EXPECT_NEAR(best_product_value_seesaw(pi, {}).value, expect, 1e-10);
}

TEST(Seesaw, bell_projector_is_one_half) {
  const SeesawResult r = best_product_value_seesaw(bell_projector(), {});
  EXPECT_NEAR(r.value, 0.5, 1e-9);
  EXPECT_NEAR(brute_force_product_value(bell_projector()), 0.5, 0.01);
}

TEST(Seesaw, result_is_consistent) {
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    const AcceptanceOperator pi = random_pi(3, rng);
    SeesawConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(t);
    cfg.restarts = 8;
    const SeesawResult r = best_product_value_seesaw(pi, cfg);
    EXPECT_NEAR(product_expectation(pi, r.certs), r.value, 1e-9);
    EXPECT_LE(r.value, best_entangled_value(pi).value + 1e-9);
    for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_GE(r.history[i], r.history[i - 1] - 1e-12);
    EXPECT_EQ(r.sweeps, r.history.size());
    EXPECT_LE(r.restart, cfg.restarts);
  }
}

TEST(Seesaw, deterministic_in_seed) {
  Rng rng(7);
  const AcceptanceOperator pi = random_pi(2, rng);
  SeesawConfig cfg;
  cfg.seed = 99;
  EXPECT_EQ(best_product_value_seesaw(pi, cfg).value, best_product_value_seesaw(pi, cfg).value);
}

TEST(Seesaw, flags_unconverged_runs) {
  Rng rng(8);
  const AcceptanceOperator pi = random_pi(3, rng);
  SeesawConfig cfg;
  cfg.max_sweeps = 1;
  cfg.convergence_tol = 1e-300;
  cfg.restarts = 2;
  const SeesawResult r = best_product_value_seesaw(pi, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.sweeps, 1u);
}

TEST(Seesaw, between_grid_and_entangled_on_random_operators) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const AcceptanceOperator pi = random_pi(2, rng);
    SeesawConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(t);
    const double s = best_product_value_seesaw(pi, cfg).value;
    EXPECT_GE(s, brute_force_product_value(pi) - 1e-9);
    EXPECT_LE(s, best_entangled_value(pi).value + 1e-9);
  }
}

TEST(ContractAllBut, matches_direct_expectation) {
  Rng rng(10);
  const AcceptanceOperator pi = random_pi(3, rng);
  std::vector<CVector> f;
  for (int i = 0; i < 3; ++i) f.push_back(haar_state(SubsystemShape({2}), rng).amplitudes());
  const CMatrix m = contract_all_but(pi, f, 1);
  const CVector joint = kron(kron(f[0], f[1]), f[2]);
  EXPECT_NEAR(pi.op().expectation(joint), std::real(inner(f[1], matvec(m, f[1]))), 1e-12);
}

TEST(BruteForce, examples) {
  const SubsystemShape s = SubsystemShape::qubits(2);
  EXPECT_NEAR(brute_force_product_value(AcceptanceOperator(HermitianOperator::identity(s)), {1, 100}), 1.0, 1e-12);
  const AcceptanceOperator p11(HermitianOperator(CMatrix::projector(CVector{0, 0, 0, 1}), s));
  EXPECT_GE(brute_force_product_value(p11), 0.999);
}

TEST(BruteForce, budget_and_grid) {
  EXPECT_EQ(grid_points_per_factor(2, 3), 4u * 6u);
  EXPECT_EQ(grid_points_per_factor(4, 2), 27u * 64u);
  const auto g = factor_grid(3, 4);
  EXPECT_EQ(g.size(), grid_points_per_factor(3, 4));
  for (const CVector& v : g) EXPECT_NEAR(norm(v), 1.0, 1e-12);
  BruteForceConfig cfg;
  cfg.resolution = 30;
  cfg.budget = 10;
  EXPECT_THROW(brute_force_product_value(bell_projector(), cfg), BudgetExceeded);
}

TEST(VerifierSpec, json_round_trip) {
  Rng rng(11);
  const VerifierSpec v(2, 1, 1, haar_unitary(SubsystemShape::qubits(3), rng), 0);
  const io::json j = to_json(v);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["q_m"], 1);
  const VerifierSpec back = verifier_from_json(io::json::parse(j.dump()));
  EXPECT_EQ(back.k(), 2u);
  EXPECT_EQ(max_abs_diff(back.circuit().matrix(), v.circuit().matrix()), 0.0);
}

}  // namespace
}  // namespace qvl

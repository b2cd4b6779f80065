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

#include "qvl/errors.hpp"
#include "qvl/random.hpp"
#include "qvl/verifier.hpp"
#include "test_support.hpp"

namespace qvl {
namespace {

using testing::dm;
using testing::ket;
using testing::ket0;
using testing::ket1;
using testing::ket_plus;
using testing::kInvSqrt2;

const std::size_t kFirst[] = {0};
const std::size_t kSecond[] = {1};

TEST(PureState, invariants) {
  EXPECT_THROW(PureState(CVector{1.0, 1.0}, SubsystemShape({2})), InvariantViolation);
  EXPECT_THROW(PureState(CVector{1.0}, SubsystemShape({2})), Error);
  const PureState n = PureState::normalized({3.0, 4.0}, SubsystemShape({2}));
  EXPECT_NEAR(n.amplitudes()[0].real(), 0.6, 1e-15);
}

TEST(DensityMatrix, invariants) {
  EXPECT_THROW(DensityMatrix(CMatrix{{1, 0}, {0, 1}}, SubsystemShape({2})), InvariantViolation);
  EXPECT_THROW(DensityMatrix(CMatrix{{1.5, 0}, {0, -0.5}}, SubsystemShape({2})), InvariantViolation);
  EXPECT_THROW(DensityMatrix(CMatrix{{0.5, 1}, {0, 0.5}}, SubsystemShape({2})), InvariantViolation);
}

TEST(UnitaryOperator, rejects_non_unitary) {
  EXPECT_THROW(UnitaryOperator(CMatrix{{1, 1}, {0, 1}}, SubsystemShape({2})), InvariantViolation);
}

TEST(TensorProduct, examples) {
  const PureState zz = tensor_product(ket0(), ket0());
  EXPECT_EQ(zz.amplitudes()[0], cplx(1.0));
  EXPECT_EQ(zz.shape(), SubsystemShape::qubits(2));

  const PureState v = tensor_product(ket0(), ket_plus());
  EXPECT_NEAR(v.amplitudes()[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(v.amplitudes()[1].real(), kInvSqrt2, 1e-15);
  EXPECT_EQ(v.amplitudes()[2], cplx(0.0));

  Rng rng(1);
  const DensityMatrix rho = wishart_density(SubsystemShape({3}), rng);
  const DensityMatrix t = tensor_product(rho, DensityMatrix::maximally_mixed(SubsystemShape({2})));
  EXPECT_NEAR(t.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_EQ(t.shape(), SubsystemShape({3, 2}));
}

TEST(PartialTrace, examples) {
  Rng rng(2);
  const PureState phi = haar_state(SubsystemShape({2}), rng);
  const PureState chi = haar_state(SubsystemShape({3}), rng);
  const DensityMatrix red = partial_trace(dm(tensor_product(phi, chi)), kFirst);
  EXPECT_LE(max_abs_diff(red.matrix(), dm(phi).matrix()), 1e-12);

  const PureState bell = ket({kInvSqrt2, 0, 0, kInvSqrt2});
  EXPECT_LE(max_abs_diff(partial_trace(dm(bell), kFirst).matrix(), CMatrix::identity(2) * cplx(0.5)), 1e-12);

  const DensityMatrix rho = wishart_density(SubsystemShape({2}), rng);
  const DensityMatrix sigma = wishart_density(SubsystemShape({3}), rng);
  EXPECT_LE(max_abs_diff(partial_trace(tensor_product(rho, sigma), kSecond).matrix(), sigma.matrix()), 1e-12);
}

TEST(PartialTrace, errors) {
  const DensityMatrix rho = dm(ket({1, 0, 0, 0}));
  EXPECT_THROW(partial_trace(rho, std::span<const std::size_t>{}), Error);
  const std::size_t out_of_range[] = {2};
  EXPECT_THROW(partial_trace(rho, out_of_range), Error);
}

TEST(PartialTrace, keeps_original_order) {
  Rng rng(3);
  const DensityMatrix a = wishart_density(SubsystemShape({2}), rng);
  const DensityMatrix b = wishart_density(SubsystemShape({3}), rng);
  const DensityMatrix c = wishart_density(SubsystemShape({2}), rng);
  const std::size_t keep[] = {2, 0};
  const DensityMatrix red = partial_trace(tensor_product(tensor_product(a, b), c), keep);
  EXPECT_EQ(red.shape(), SubsystemShape({2, 2}));
  EXPECT_LE(max_abs_diff(red.matrix(), tensor_product(a, c).matrix()), 1e-12);
}

TEST(Purify, pure_input) {
  Rng rng(4);
  const PureState phi = haar_state(SubsystemShape({2}), rng);
  const PureState p = purify(dm(phi));
  EXPECT_LE(max_abs_diff(partial_trace(dm(p), kFirst).matrix(), dm(phi).matrix()), 1e-9);
  EXPECT_NEAR(max_product_fidelity(p), 1.0, 1e-9);
}

TEST(Purify, maximally_mixed_qubit) {
  const PureState p = purify(DensityMatrix::maximally_mixed(SubsystemShape({2})));
  const auto s = schmidt_decomposition(p);
  EXPECT_NEAR(s.coefficients[0], kInvSqrt2, 1e-12);
  EXPECT_NEAR(s.coefficients[1], kInvSqrt2, 1e-12);
  EXPECT_LE(max_abs_diff(partial_trace(dm(p), kFirst).matrix(), CMatrix::identity(2) * cplx(0.5)), 1e-9);
}

TEST(Purify, diagonal_input_schmidt_coefficients) {
  const double d[] = {0.9, 0.1};
  const DensityMatrix rho(CMatrix::diagonal(d), SubsystemShape({2}));
  const PureState p = purify(rho);
  const auto s = schmidt_decomposition(p);
  EXPECT_NEAR(s.coefficients[0], std::sqrt(0.9), 1e-12);
  EXPECT_NEAR(s.coefficients[1], std::sqrt(0.1), 1e-12);
  EXPECT_LE(max_abs_diff(partial_trace(dm(p), kFirst).matrix(), rho.matrix()), 1e-9);
}

TEST(Purify, round_trip_on_random_states) {
  Rng rng(5);
  for (std::size_t d : {2, 3, 4, 8}) {
    for (int t = 0; t < 20; ++t) {
      const DensityMatrix rho = wishart_density(SubsystemShape({d}), rng, 1 + t % d);
      EXPECT_LE(max_abs_diff(partial_trace(dm(purify(rho)), kFirst).matrix(), rho.matrix()), 1e-9);
    }
  }
}

TEST(Fidelity, examples) {
  Rng rng(6);
  const DensityMatrix rho = wishart_density(SubsystemShape({3}), rng);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
  EXPECT_NEAR(fidelity(dm(ket0()), dm(ket1())), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(dm(ket0()), dm(ket_plus())), kInvSqrt2, 1e-12);
  EXPECT_THROW(fidelity(dm(ket0()), DensityMatrix::maximally_mixed(SubsystemShape({3}))), ShapeMismatch);
}

TEST(Fidelity, pure_states_give_overlap_and_symmetry) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const PureState a = haar_state(SubsystemShape({4}), rng);
    const PureState b = haar_state(SubsystemShape({4}), rng);
    EXPECT_NEAR(fidelity(dm(a), dm(b)), std::abs(inner(a.amplitudes(), b.amplitudes())), 1e-9);
    const DensityMatrix r = wishart_density(SubsystemShape({4}), rng);
    const DensityMatrix s = wishart_density(SubsystemShape({4}), rng);
    EXPECT_NEAR(fidelity(r, s), fidelity(s, r), 1e-9);
  }
}

TEST(TraceNormHalf, examples) {
  Rng rng(8);
  const DensityMatrix rho = wishart_density(SubsystemShape({3}), rng);
  EXPECT_NEAR(trace_norm_half(rho - rho), 0.0, 1e-15);
  EXPECT_NEAR(trace_norm_half(dm(ket0()) - dm(ket1())), 1.0, 1e-12);
  // Eigenvalues of |0><0| - |+><+| from the closed-form 2x2 oracle.
  const HermitianOperator diff = dm(ket0()) - dm(ket_plus());
  const auto [hi, lo] = testing::eig2(diff.matrix());
  EXPECT_NEAR(trace_norm_half(diff), 0.5 * (std::abs(hi) + std::abs(lo)), 1e-12);
  EXPECT_NEAR(trace_norm_half(diff), kInvSqrt2, 1e-12);
}

// 1 - F <= ||rho - sigma||_tr <= sqrt(1 - F^2), with the half-factor norm.
TEST(Metrics, fidelity_trace_distance_sandwich) {
  Rng rng(9);
  for (std::size_t d : {2, 4, 8}) {
    for (int t = 0; t < 200; ++t) {
      const std::size_t rank = (t % 3 == 0) ? 1 : 0;
      const DensityMatrix r = wishart_density(SubsystemShape({d}), rng, rank);
      const DensityMatrix s = wishart_density(SubsystemShape({d}), rng);
      const double f = fidelity(r, s);
      const double tn = trace_norm_half(r - s);
      EXPECT_LE(1.0 - f, tn + 1e-8) << "d=" << d;
      EXPECT_LE(tn, std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-8) << "d=" << d;
    }
  }
}

TEST(Metrics, unitary_invariance) {
  Rng rng(10);
  for (int t = 0; t < 30; ++t) {
    const SubsystemShape shape({4});
    const DensityMatrix r = wishart_density(shape, rng);
    const DensityMatrix s = wishart_density(shape, rng);
    const CMatrix u = haar_unitary(shape, rng).matrix();
    const DensityMatrix ur(u * r.matrix() * u.adjoint(), shape);
    const DensityMatrix us(u * s.matrix() * u.adjoint(), shape);
    EXPECT_NEAR(fidelity(ur, us), fidelity(r, s), 1e-9);
    EXPECT_NEAR(trace_norm_half(ur - us), trace_norm_half(r - s), 1e-9);
  }
}

TEST(PermuteSubsystems, examples) {
  const std::size_t id[] = {0, 1};
  const std::size_t sw[] = {1, 0};
  const PureState s01 = ket({0, 1, 0, 0});
  EXPECT_EQ(permute_subsystems(s01, id).amplitudes(), s01.amplitudes());
  EXPECT_EQ(permute_subsystems(s01, sw).amplitudes()[2], cplx(1.0));

  Rng rng(11);
  const PureState psi = haar_state(SubsystemShape({2, 3, 4}), rng);
  const std::size_t swap02[] = {2, 1, 0};
  const PureState once = permute_subsystems(psi, swap02);
  EXPECT_EQ(once.shape(), SubsystemShape({4, 3, 2}));
  EXPECT_LE(max_abs_diff(permute_subsystems(once, swap02).amplitudes(), psi.amplitudes()), 0.0);

  const std::size_t cyc[] = {1, 2, 0};
  const auto inv = inverse_permutation(cyc);
  const PureState there = permute_subsystems(psi, cyc);
  EXPECT_LE(max_abs_diff(permute_subsystems(there, inv).amplitudes(), psi.amplitudes()), 0.0);

  const std::size_t bad[] = {0, 0, 1};
  EXPECT_THROW(permute_subsystems(psi, bad), Error);
}

TEST(PermuteSubsystems, operator_and_state_agree) {
  Rng rng(12);
  const PureState a = haar_state(SubsystemShape({2}), rng);
  const PureState b = haar_state(SubsystemShape({3}), rng);
  const std::size_t sw[] = {1, 0};
  const DensityMatrix moved = permute_subsystems(dm(tensor_product(a, b)), sw);
  EXPECT_LE(max_abs_diff(moved.matrix(), dm(tensor_product(b, a)).matrix()), 1e-12);
}

TEST(HermitianEigensystem, examples) {
  const auto id = hermitian_eigensystem(HermitianOperator::identity(SubsystemShape({3})));
  for (double v : id.values) EXPECT_NEAR(v, 1.0, 1e-12);

  const double d[] = {1.0, 3.0};
  const auto dg = hermitian_eigensystem(HermitianOperator(CMatrix::diagonal(d), SubsystemShape({2})));
  EXPECT_NEAR(dg.values[0], 3.0, 1e-12);
  EXPECT_NEAR(std::abs(dg.vectors(1, 0)), 1.0, 1e-12);

  Rng rng(13);
  const CMatrix g = ginibre(5, 5, rng);
  const HermitianOperator h((g + g.adjoint()) * cplx(0.5), SubsystemShape({5}));
  const auto es = hermitian_eigensystem(h);
  EXPECT_LE(max_abs_diff(es.reconstruct(), h.matrix()), 1e-9);
  EXPECT_LE(max_abs_diff(adjoint_times(es.vectors, es.vectors), CMatrix::identity(5)), 1e-9);

  EXPECT_THROW(HermitianOperator(CMatrix{{0, 1}, {0, 0}}, SubsystemShape({2})), InvariantViolation);
}

TEST(Schmidt, examples) {
  const auto prod = schmidt_decomposition(tensor_product(ket0(), ket_plus()));
  EXPECT_NEAR(prod.coefficients[0], 1.0, 1e-12);
  EXPECT_NEAR(prod.coefficients[1], 0.0, 1e-12);

  const auto bell = schmidt_decomposition(ket({kInvSqrt2, 0, 0, kInvSqrt2}));
  EXPECT_NEAR(bell.coefficients[0], kInvSqrt2, 1e-12);
  EXPECT_NEAR(bell.coefficients[1], kInvSqrt2, 1e-12);

  EXPECT_THROW(schmidt_decomposition(PureState::basis(SubsystemShape::qubits(3), 0)), InvalidArgument);
}

TEST(Schmidt, random_2x3_matches_singular_values) {
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const PureState psi = haar_state(SubsystemShape({2, 3}), rng);
    // Singular values of the 2x3 amplitude matrix M: sqrt of eig(M M^dagger).
    CMatrix m(2, 3);
    for (std::size_t i = 0; i < 6; ++i) m(i / 3, i % 3) = psi.amplitudes()[i];
    const auto [hi, lo] = testing::eig2(testing::naive_product(m, m.adjoint()));
    const auto s = schmidt_decomposition(psi);
    ASSERT_EQ(s.coefficients.size(), 2u);
    EXPECT_NEAR(s.coefficients[0], std::sqrt(hi), 1e-9);
    EXPECT_NEAR(s.coefficients[1], std::sqrt(std::max(lo, 0.0)), 1e-9);
    EXPECT_NEAR(s.coefficients[0] * s.coefficients[0] + s.coefficients[1] * s.coefficients[1], 1.0, 1e-9);
    EXPECT_LE(max_abs_diff(s.reconstruct(), psi.amplitudes()), 1e-9);
  }
}

TEST(MaxProductFidelity, examples) {
  EXPECT_NEAR(max_product_fidelity(ket({kInvSqrt2, 0, 0, kInvSqrt2})), kInvSqrt2, 1e-12);
  EXPECT_NEAR(max_product_fidelity(tensor_product(ket_plus(), ket1())), 1.0, 1e-12);
  CVector me(16);
  for (std::size_t j = 0; j < 4; ++j) me[j * 4 + j] = 0.5;
  EXPECT_NEAR(max_product_fidelity(PureState(me, SubsystemShape({4, 4}))), 0.5, 1e-12);
}

// max over product |a>|b> of |<a b|psi>|: grid over a, exact best b.
TEST(MaxProductFidelity, agrees_with_product_grid) {
  Rng rng(15);
  const auto grid = factor_grid(2, 40);
  for (int t = 0; t < 10; ++t) {
    const PureState psi = haar_state(SubsystemShape::qubits(2), rng);
    double best = 0.0;
    for (const CVector& a : grid) {
      // <a| (x) I applied to psi; its norm is the best overlap for this a.
      const cplx b0 = std::conj(a[0]) * psi.amplitudes()[0] + std::conj(a[1]) * psi.amplitudes()[2];
      const cplx b1 = std::conj(a[0]) * psi.amplitudes()[1] + std::conj(a[1]) * psi.amplitudes()[3];
      best = std::max(best, std::sqrt(std::norm(b0) + std::norm(b1)));
    }
    const double exact = max_product_fidelity(psi);
    EXPECT_LE(best, exact + 1e-12);
    EXPECT_GE(best, exact - 2e-3);
  }
}

}  // namespace
}  // namespace qvl

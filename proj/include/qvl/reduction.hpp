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

// Certificate-count reductions. A verifier with k = 3m + r certificates is
// turned into one with 2m + r certificates of twice the length:
//
//   D_{1,j} = (R_{1,j}, S_{1,j}),  D_{2,j} = (R_{2,j}, S_{2,j}),  j = 1..m
//   D_{3,j} = (R_{3,j}, S_{3,j}),  j = 1..r
//
// The new verifier rejects unless every S_3 register is |0>, then runs one of
// two tests with equal probability: a swap test between the tuples S_{1,.}
// and S_{2,.}, or the original circuit on (V, R_{1,.}, R_{2,.}, S_{1,.},
// R_{3,.}). The coin is a real qubit, so the result is again a unitary
// VerifierSpec. Its private register is [coin, B, V...] and the original
// output qubit keeps its role.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qvl/interchange.hpp"
#include "qvl/verifier.hpp"

namespace qvl {

/// Root of 1/2 + d/2 = eps + sqrt(1 - d^2) on [0, 1]. Throws for eps outside [0, 1].
double delta_threshold(double epsilon);

/// 1 - 1/(10 p^2). Throws for p < 1.
double soundness_bound(double p);

/// 1 - 1/(10^{2^c - 1} p^{2^c}): the bound after c reduction steps.
double composed_soundness_bound(double p, std::size_t steps);

/// Three certificates (C1, C2, C3) -> (C1 (x) C3, C2 (x) C3).
CertificateSet honest_certificates_lift(const CertificateSet& c);

/// k = 3m + r certificates -> 2m + r, laid out as in the header comment with
/// S_{3,j} = |0...0>.
CertificateSet honest_certificates_lift_grouped(const CertificateSet& c);

/// Requires k = 3.
VerifierSpec reduce_3_to_2(const VerifierSpec& v);

/// Requires k = 3m + r with m >= 1. Throws DimensionCapExceeded when the
/// reduced circuit is too large to hold densely.
VerifierSpec reduce_3k_r_to_2k_r(const VerifierSpec& v);

/// The reduced acceptance operator assembled from its parts,
/// P_0(S_3) (x) (Pi_sep + Pi_cons) / 2, without going through a circuit.
AcceptanceOperator reduced_acceptance_operator_structural(const AcceptanceOperator& original,
                                                          std::size_t q_m);

/// Only the separability half: I_R (x) (I + SWAP(S_1 tuple, S_2 tuple)) / 2 on
/// the reduced certificate space of a k-certificate verifier.
AcceptanceOperator separability_operator(std::size_t k, std::size_t q_m);

struct ScheduleStep {
  std::size_t before;
  std::size_t after;
  std::size_t m;
  std::size_t r;
  /// Soundness parameter after this step (p -> 10 p^2) and its bound 1 - 1/p.
  double p;
  double bound;
};

struct Schedule {
  std::vector<ScheduleStep> steps;
  double input_soundness;
  double output_soundness_bound;
};

/// K -> K - floor(K/3) until K = 2, with the composed bound. Symbolic; any k >= 2.
Schedule reduction_schedule(std::size_t k, double p);

struct ReductionOptions {
  SeesawConfig seesaw;
  BruteForceConfig brute_force;
  bool cross_check_brute_force = true;
  /// When present, completeness is measured on the lifted honest certificates.
  std::optional<CertificateSet> honest;
};

struct ReductionReport {
  double p;
  double input_soundness;
  double output_soundness_bound;
  std::optional<double> completeness_value;
  std::optional<double> measured_product_soundness;
  std::vector<ScheduleStep> iteration_trace;
  std::uint64_t seed;
  std::optional<VerifierSpec> reduced;
};

/// Applies the reduction until two certificates remain and measures the result
/// (seesaw, plus the grid where the budget allows). Throws for k < 2.
std::pair<VerifierSpec, ReductionReport> reduce_to_2(const VerifierSpec& v, double p,
                                                     const ReductionOptions& opt = {});

io::json to_json(const ScheduleStep& s);
io::json to_json(const ReductionReport& r);

/// Product optimum used for soundness: seesaw, raised by the grid value when
/// the grid fits its budget.
double measured_product_optimum(const AcceptanceOperator& pi, const SeesawConfig& seesaw,
                                const BruteForceConfig& brute, bool cross_check);

struct ToyInstance {
  VerifierSpec verifier;
  /// Certificates accepted with probability 1, for completeness instances.
  std::optional<CertificateSet> honest;
  /// Measured product optimum and p = 1/(1 - eps), for soundness instances.
  double product_soundness = 0.0;
  double p = 1.0;
  std::uint64_t seed = 0;
};

/// A verifier that accepts a known product certificate with probability 1.
ToyInstance perfect_completeness_instance(std::size_t k, std::size_t q_m, std::size_t q_v,
                                          std::uint64_t seed);

/// Haar-random verifier whose measured product optimum is at most max_eps.
/// Seeds are derived from `seed` until one qualifies.
ToyInstance random_soundness_instance(std::size_t k, std::size_t q_m, std::size_t q_v,
                                      std::uint64_t seed, double max_eps = 0.95);

}  // namespace qvl

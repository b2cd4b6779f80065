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

// Verifiers with k unentangled certificates. A VerifierSpec is one
// instantiated circuit acting on |0^{q_v}> (x) |C_1> (x) ... (x) |C_k>, with
// qubit 0 the most significant and the private block first. It accepts when
// the designated output qubit reads 1.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qvl/interchange.hpp"
#include "qvl/qstate.hpp"

namespace qvl {

class VerifierSpec {
 public:
  /// Checks circuit dimension 2^{q_v + k q_m}, k >= 1, q_m >= 1, q_v >= 1 and
  /// output_qubit < q_v.
  VerifierSpec(std::size_t k, std::size_t q_m, std::size_t q_v, UnitaryOperator circuit,
               std::size_t output_qubit);

  std::size_t k() const { return k_; }
  std::size_t q_m() const { return q_m_; }
  std::size_t q_v() const { return q_v_; }
  std::size_t output_qubit() const { return output_qubit_; }
  const UnitaryOperator& circuit() const { return circuit_; }

  std::size_t total_qubits() const { return q_v_ + k_ * q_m_; }
  std::size_t certificate_dim() const { return std::size_t{1} << q_m_; }
  /// Shape of the certificate space: k factors of dimension 2^{q_m}.
  SubsystemShape certificate_shape() const;

 private:
  std::size_t k_;
  std::size_t q_m_;
  std::size_t q_v_;
  UnitaryOperator circuit_;
  std::size_t output_qubit_;
};

/// Hermitian 0 <= Pi <= I on the certificate space; <C|Pi|C> is the
/// acceptance probability of the product certificate C.
class AcceptanceOperator {
 public:
  AcceptanceOperator(HermitianOperator op, std::size_t k, std::size_t q_m);
  /// Certificates of arbitrary local dimension; shape gives the factors.
  explicit AcceptanceOperator(HermitianOperator op);

  const HermitianOperator& op() const { return op_; }
  const CMatrix& matrix() const { return op_.matrix(); }
  const SubsystemShape& shape() const { return op_.shape(); }
  std::size_t k() const { return op_.shape().count(); }

 private:
  HermitianOperator op_;
};

class CertificateSet {
 public:
  explicit CertificateSet(std::vector<PureState> certs);

  const std::vector<PureState>& certs() const { return certs_; }
  const PureState& operator[](std::size_t i) const { return certs_.at(i); }
  std::size_t size() const { return certs_.size(); }
  /// C_1 (x) ... (x) C_k
  PureState joint() const;

 private:
  std::vector<PureState> certs_;
};

/// Pi = A^dagger P_1 A with A = U (|0^{q_v}> (x) I).
AcceptanceOperator acceptance_operator(const VerifierSpec& v);

/// Runs the circuit on |0^{q_v}> (x) C_1 (x) ... (x) C_k and returns P(output = 1).
double accept_probability(const VerifierSpec& v, const CertificateSet& c);

/// <C_1 ... C_k| Pi |C_1 ... C_k>
double product_expectation(const AcceptanceOperator& pi, const CertificateSet& c);

struct EntangledOptimum {
  double value;
  PureState state;
};

/// Top eigenpair of Pi: the best acceptance over arbitrary (entangled) inputs.
EntangledOptimum best_entangled_value(const AcceptanceOperator& pi);

struct SeesawConfig {
  std::size_t restarts = 32;
  std::size_t max_sweeps = 200;
  double convergence_tol = 1e-10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SeesawResult {
  double value;
  CertificateSet certs;
  /// False when the winning restart hit max_sweeps before converging.
  bool converged;
  std::size_t sweeps;
  /// Objective after each sweep of the winning restart; nondecreasing.
  std::vector<double> history;
  /// Index of the winning restart; restarts == index of the deterministic
  /// start built from the entangled optimum.
  std::size_t restart;
};

/// Alternating maximization over product certificates. Each step replaces
/// one factor by the top eigenvector of Pi contracted with all the others.
SeesawResult best_product_value_seesaw(const AcceptanceOperator& pi, const SeesawConfig& cfg);

/// d x d operator (x)_{i != j} <c_i| Pi (x)_{i != j} |c_i> acting on factor j.
CMatrix contract_all_but(const AcceptanceOperator& pi, const std::vector<CVector>& factors,
                         std::size_t j);

struct BruteForceConfig {
  /// Points per angle; 0 picks the finest resolution inside the budget.
  std::size_t resolution = 0;
  std::size_t budget = 1'000'000;
};

/// Deterministic grid over every factor but the last; the last factor is
/// maximized exactly. A lower bound on the product optimum.
double brute_force_product_value(const AcceptanceOperator& pi, const BruteForceConfig& cfg = {});

/// Grid points per factor of dimension d at a given resolution.
std::size_t grid_points_per_factor(std::size_t d, std::size_t resolution);

/// Unit vectors on the grid for a factor of dimension d.
std::vector<CVector> factor_grid(std::size_t d, std::size_t resolution);

io::json to_json(const VerifierSpec& v);
VerifierSpec verifier_from_json(const io::json& j);

}  // namespace qvl

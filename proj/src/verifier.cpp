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

#include "qvl/verifier.hpp"

#include <algorithm>
#include <string>

#include "qvl/errors.hpp"
#include "qvl/linalg.hpp"
#include "qvl/tolerance.hpp"

namespace qvl {

VerifierSpec::VerifierSpec(std::size_t k, std::size_t q_m, std::size_t q_v,
                           UnitaryOperator circuit, std::size_t output_qubit)
    : k_(k), q_m_(q_m), q_v_(q_v), circuit_(std::move(circuit)), output_qubit_(output_qubit) {
  if (k_ < 1) throw InvariantViolation("VerifierSpec: k must be >= 1");
  if (q_m_ < 1) throw InvariantViolation("VerifierSpec: q_m must be >= 1");
  if (q_v_ < 1) throw InvariantViolation("VerifierSpec: q_v must be >= 1");
  if (output_qubit_ >= q_v_) throw InvariantViolation("VerifierSpec: output_qubit must be < q_v");
  const std::size_t qubits = total_qubits();
  if (qubits >= 8 * sizeof(std::size_t) - 1 || circuit_.dim() != (std::size_t{1} << qubits)) {
    throw InvariantViolation("VerifierSpec: circuit dimension must be 2^(q_v + k q_m) = 2^" +
                             std::to_string(qubits));
  }
}

SubsystemShape VerifierSpec::certificate_shape() const {
  return SubsystemShape::uniform(certificate_dim(), k_);
}

AcceptanceOperator::AcceptanceOperator(HermitianOperator op, std::size_t k, std::size_t q_m)
    : AcceptanceOperator(std::move(op)) {
  if (op_.shape() != SubsystemShape::uniform(std::size_t{1} << q_m, k)) {
    throw ShapeMismatch("AcceptanceOperator: operator shape " + op_.shape().to_string() +
                        " does not match k = " + std::to_string(k) +
                        ", q_m = " + std::to_string(q_m));
  }
}

AcceptanceOperator::AcceptanceOperator(HermitianOperator op) : op_(std::move(op)) {
  const linalg::EigenSystem es = linalg::eigh(op_.matrix());
  if (es.values.back() < -tol::kAlgebra || es.values.front() > 1.0 + tol::kAlgebra) {
    throw InvariantViolation("AcceptanceOperator: eigenvalues must lie in [0, 1] within 1e-9");
  }
}

CertificateSet::CertificateSet(std::vector<PureState> certs) : certs_(std::move(certs)) {
  if (certs_.empty()) throw InvariantViolation("CertificateSet: empty");
}

PureState CertificateSet::joint() const { return tensor_product(certs_); }

namespace {

void check_certificates(const VerifierSpec& v, const CertificateSet& c) {
  if (c.size() != v.k()) {
    throw ShapeMismatch("verifier expects " + std::to_string(v.k()) + " certificates, got " +
                        std::to_string(c.size()));
  }
  for (const PureState& s : c.certs()) {
    if (s.dim() != v.certificate_dim()) {
      throw ShapeMismatch("certificate dimension " + std::to_string(s.dim()) + " != 2^q_m = " +
                          std::to_string(v.certificate_dim()));
    }
  }
}

bool output_bit(const VerifierSpec& v, std::size_t row) {
  const std::size_t shift = v.total_qubits() - 1 - v.output_qubit();
  return ((row >> shift) & 1U) != 0;
}

}  // namespace

AcceptanceOperator acceptance_operator(const VerifierSpec& v) {
  const CMatrix& u = v.circuit().matrix();
  const std::size_t n = u.rows();
  const std::size_t dc = std::size_t{1} << (v.k() * v.q_m());
  // Rows of U (|0^{q_v}> (x) I) on which the output qubit is 1.
  CMatrix b(n / 2, dc);
  std::size_t r_out = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (!output_bit(v, r)) continue;
    std::copy_n(u.row(r).begin(), dc, b.row(r_out).begin());
    ++r_out;
  }
  const CMatrix pi = adjoint_times(b, b).hermitian_part();
  return AcceptanceOperator(HermitianOperator(pi, v.certificate_shape()), v.k(), v.q_m());
}

double accept_probability(const VerifierSpec& v, const CertificateSet& c) {
  check_certificates(v, c);
  const PureState joint = c.joint();
  // |0^{q_v}> (x) C occupies the first 2^{k q_m} amplitudes.
  CVector input(v.circuit().dim());
  std::copy(joint.amplitudes().begin(), joint.amplitudes().end(), input.begin());
  const CVector out = v.circuit().apply(input);
  double p = 0.0;
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (output_bit(v, r)) p += std::norm(out[r]);
  }
  return std::clamp(p, 0.0, 1.0);
}

double product_expectation(const AcceptanceOperator& pi, const CertificateSet& c) {
  const PureState joint = c.joint();
  if (joint.dim() != pi.op().dim()) throw ShapeMismatch("product_expectation: dimension mismatch");
  return pi.op().expectation(joint.amplitudes());
}

EntangledOptimum best_entangled_value(const AcceptanceOperator& pi) {
  auto [value, vec] = linalg::top_eigenpair(pi.matrix());
  return {value, PureState::normalized(std::move(vec), pi.shape())};
}

io::json to_json(const VerifierSpec& v) {
  return io::json{{"k", v.k()},
                  {"q_m", v.q_m()},
                  {"q_v", v.q_v()},
                  {"output_qubit", v.output_qubit()},
                  {"unitary", io::to_json(v.circuit())}};
}

VerifierSpec verifier_from_json(const io::json& j) {
  for (const char* key : {"k", "q_m", "q_v", "output_qubit", "unitary"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("verifier JSON: missing \"") + key + "\"");
  }
  return VerifierSpec(j["k"].get<std::size_t>(), j["q_m"].get<std::size_t>(),
                      j["q_v"].get<std::size_t>(), io::unitary_from_json(j["unitary"]),
                      j["output_qubit"].get<std::size_t>());
}

}  // namespace qvl

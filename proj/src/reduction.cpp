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

#include "qvl/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qvl/circuit.hpp"
#include "qvl/errors.hpp"
#include "qvl/linalg.hpp"
#include "qvl/random.hpp"

namespace qvl {
namespace {

// Dense unitaries are side x side complex matrices; keep them to 256 MiB.
constexpr std::size_t kMaxOperatorQubits = 12;

struct Layout {
  std::size_t k, m, r, q_m, q_v, out_k;

  static Layout of(std::size_t k, std::size_t q_m, std::size_t q_v) {
    if (k < 3) {
      throw InvalidArgument("reduction needs k = 3m + r with m >= 1, got k = " + std::to_string(k));
    }
    return Layout{k, k / 3, k % 3, q_m, q_v, k - k / 3};
  }

  // Subsystems of the reduced circuit: [coin, B, V qubits, (R, S) per D].
  std::size_t coin() const { return 0; }
  std::size_t b() const { return 1; }
  std::size_t v(std::size_t i) const { return 2 + i; }
  std::size_t reg(std::size_t t, std::size_t s) const { return 2 + q_v + 2 * t + s; }
  std::size_t r1(std::size_t j) const { return reg(j, 0); }
  std::size_t s1(std::size_t j) const { return reg(j, 1); }
  std::size_t r2(std::size_t j) const { return reg(m + j, 0); }
  std::size_t s2(std::size_t j) const { return reg(m + j, 1); }
  std::size_t r3(std::size_t j) const { return reg(2 * m + j, 0); }
  std::size_t s3(std::size_t j) const { return reg(2 * m + j, 1); }

  std::size_t out_qubits() const { return q_v + 2 + out_k * 2 * q_m; }

  SubsystemShape circuit_shape() const {
    std::vector<std::size_t> dims(2 + q_v, 2);
    dims.resize(2 + q_v + 2 * out_k, std::size_t{1} << q_m);
    return SubsystemShape(std::move(dims));
  }
};

PureState regrouped(const PureState& s) { return PureState(s.amplitudes(), SubsystemShape({s.dim()})); }

// Unitary exchanging subsystems a and b.
CMatrix subsystem_swap(const SubsystemShape& shape, std::size_t a, std::size_t b) {
  const auto strides = shape.strides();
  CMatrix p(shape.total(), shape.total());
  for (std::size_t x = 0; x < shape.total(); ++x) {
    const std::size_t da = (x / strides[a]) % shape.dim(a);
    const std::size_t db = (x / strides[b]) % shape.dim(b);
    const std::size_t y = x + (db - da) * strides[a] + (da - db) * strides[b];
    p(y, x) = 1.0;
  }
  return p;
}

// Natural register order: the original certificate order (R_1, R_2, S_1, R_3)
// followed by S_2 and S_3. Returns the map natural index -> reduced position.
std::vector<std::size_t> natural_to_reduced(std::size_t m, std::size_t r) {
  std::vector<std::size_t> perm(4 * m + 2 * r);
  for (std::size_t j = 0; j < m; ++j) {
    perm[j] = 2 * j;                      // R_{1,j}
    perm[m + j] = 2 * (m + j);            // R_{2,j}
    perm[2 * m + j] = 2 * j + 1;          // S_{1,j}
    perm[3 * m + r + j] = 2 * (m + j) + 1;  // S_{2,j}
  }
  for (std::size_t j = 0; j < r; ++j) {
    perm[3 * m + j] = 2 * (2 * m + j);              // R_{3,j}
    perm[4 * m + r + j] = 2 * (2 * m + j) + 1;      // S_{3,j}
  }
  return perm;
}

// (I + SWAP(S_1 tuple, S_2 tuple)) / 2 in natural order.
CMatrix tuple_swap_symmetrizer(const SubsystemShape& nat, std::size_t m, std::size_t r) {
  CMatrix swap = CMatrix::identity(nat.total());
  for (std::size_t j = 0; j < m; ++j) {
    swap = subsystem_swap(nat, 2 * m + j, 3 * m + r + j) * swap;
  }
  CMatrix sym = CMatrix::identity(nat.total());
  sym += swap;
  sym *= 0.5;
  return sym;
}

AcceptanceOperator to_reduced_order(const CMatrix& natural, const SubsystemShape& nat,
                                    std::size_t m, std::size_t r, std::size_t q_m) {
  const auto perm = natural_to_reduced(m, r);
  const CMatrix moved = permute_matrix(natural, nat, perm);
  const std::size_t d2 = std::size_t{1} << (2 * q_m);
  return AcceptanceOperator(HermitianOperator(moved, SubsystemShape::uniform(d2, 2 * m + r)));
}

}  // namespace

double delta_threshold(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InvalidArgument("delta_threshold: epsilon must lie in [0, 1]");
  }
  const double delta = (-1.0 + 2.0 * epsilon + 4.0 * std::sqrt(1.0 + epsilon - epsilon * epsilon)) / 5.0;
  return std::clamp(delta, 0.0, 1.0);
}

double soundness_bound(double p) {
  if (!(p >= 1.0)) throw InvalidArgument("soundness_bound: p must be >= 1");
  return 1.0 - 1.0 / (10.0 * p * p);
}

double composed_soundness_bound(double p, std::size_t steps) {
  if (!(p >= 1.0)) throw InvalidArgument("composed_soundness_bound: p must be >= 1");
  double q = p;
  for (std::size_t i = 0; i < steps; ++i) q = 10.0 * q * q;
  return 1.0 - 1.0 / q;
}

CertificateSet honest_certificates_lift(const CertificateSet& c) {
  if (c.size() != 3) {
    throw ShapeMismatch("honest_certificates_lift: expected 3 certificates, got " + std::to_string(c.size()));
  }
  return CertificateSet({regrouped(tensor_product(c[0], c[2])), regrouped(tensor_product(c[1], c[2]))});
}

CertificateSet honest_certificates_lift_grouped(const CertificateSet& c) {
  const std::size_t k = c.size();
  if (k < 3) throw ShapeMismatch("honest_certificates_lift_grouped: need at least 3 certificates");
  const std::size_t m = k / 3;
  const std::size_t r = k % 3;
  std::vector<PureState> out;
  for (std::size_t j = 0; j < m; ++j) out.push_back(regrouped(tensor_product(c[j], c[2 * m + j])));
  for (std::size_t j = 0; j < m; ++j) out.push_back(regrouped(tensor_product(c[m + j], c[2 * m + j])));
  for (std::size_t j = 0; j < r; ++j) {
    const PureState& last = c[3 * m + j];
    out.push_back(regrouped(tensor_product(last, PureState::basis(SubsystemShape({last.dim()}), 0))));
  }
  return CertificateSet(std::move(out));
}

VerifierSpec reduce_3_to_2(const VerifierSpec& v) {
  if (v.k() != 3) throw InvalidArgument("reduce_3_to_2: expected k = 3, got " + std::to_string(v.k()));
  return reduce_3k_r_to_2k_r(v);
}

VerifierSpec reduce_3k_r_to_2k_r(const VerifierSpec& v) {
  const Layout L = Layout::of(v.k(), v.q_m(), v.q_v());
  const std::size_t n = L.out_qubits();
  if (n > kMaxOperatorQubits || (std::size_t{1} << n) > dense_cap()) {
    throw DimensionCapExceeded("reduce_3k_r_to_2k_r: reduced circuit needs " + std::to_string(n) +
                               " qubits, beyond the dense operator limit");
  }
  using circuit::Condition;
  const std::size_t out = L.v(v.output_qubit());
  circuit::Circuit c(L.circuit_shape());
  const Condition sep{{{L.coin(), 0}}, {}};
  const Condition sep_b1{{{L.coin(), 0}, {L.b(), 1}}, {}};

  c.gate({L.coin()}, circuit::hadamard());
  // Swap test between the S_1 and S_2 tuples; B = 0 means "symmetric".
  c.gate({L.b()}, circuit::hadamard(), sep);
  for (std::size_t j = 0; j < L.m; ++j) c.swap(L.s1(j), L.s2(j), sep_b1);
  c.gate({L.b()}, circuit::hadamard(), sep);
  // Report the verdict on the original output qubit, which is still |0> here.
  c.gate({L.b()}, circuit::pauli_x(), sep);
  c.swap(L.b(), out, sep);

  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < L.q_v; ++i) targets.push_back(L.v(i));
  for (std::size_t j = 0; j < L.m; ++j) targets.push_back(L.r1(j));
  for (std::size_t j = 0; j < L.m; ++j) targets.push_back(L.r2(j));
  for (std::size_t j = 0; j < L.m; ++j) targets.push_back(L.s1(j));
  for (std::size_t j = 0; j < L.r; ++j) targets.push_back(L.r3(j));
  c.gate(std::move(targets), v.circuit().matrix(), Condition{{{L.coin(), 1}}, {}});

  // Reject when any S_3 register is nonzero: B is |0> on both branches, so
  // swapping it into the output qubit clears the verdict. The conditions are
  // disjoint, so each branch is cleared once.
  for (std::size_t j = 0; j < L.r; ++j) {
    Condition cond;
    for (std::size_t i = 0; i < j; ++i) cond.when.push_back({L.s3(i), 0});
    cond.unless.push_back({L.s3(j), 0});
    c.swap(L.b(), out, cond);
  }

  return VerifierSpec(L.out_k, 2 * v.q_m(), v.q_v() + 2,
                      UnitaryOperator(c.unitary(), SubsystemShape::qubits(n)), v.output_qubit() + 2);
}

AcceptanceOperator reduced_acceptance_operator_structural(const AcceptanceOperator& original,
                                                          std::size_t q_m) {
  const Layout L = Layout::of(original.k(), q_m, 1);
  const std::size_t d = std::size_t{1} << q_m;
  if (original.shape() != SubsystemShape::uniform(d, L.k)) {
    throw ShapeMismatch("reduced_acceptance_operator_structural: operator shape does not match q_m");
  }
  const SubsystemShape nat = SubsystemShape::uniform(d, 4 * L.m + 2 * L.r);
  const std::size_t extra = nat.total() / original.shape().total();

  CMatrix mix = kron(original.matrix(), CMatrix::identity(extra));
  mix += tuple_swap_symmetrizer(nat, L.m, L.r);
  mix *= 0.5;

  // P_0 on S_3 commutes with both tests; the S_3 registers are the last r
  // subsystems, so their all-zero block is every (d^r)-th index.
  std::size_t s3_dim = 1;
  for (std::size_t j = 0; j < L.r; ++j) s3_dim *= d;
  if (s3_dim > 1) {
    for (std::size_t x = 0; x < nat.total(); ++x) {
      for (std::size_t y = 0; y < nat.total(); ++y) {
        if (x % s3_dim != 0 || y % s3_dim != 0) mix(x, y) = 0.0;
      }
    }
  }
  return to_reduced_order(mix, nat, L.m, L.r, q_m);
}

AcceptanceOperator separability_operator(std::size_t k, std::size_t q_m) {
  const Layout L = Layout::of(k, q_m, 1);
  const SubsystemShape nat = SubsystemShape::uniform(std::size_t{1} << q_m, 4 * L.m + 2 * L.r);
  return to_reduced_order(tuple_swap_symmetrizer(nat, L.m, L.r), nat, L.m, L.r, q_m);
}

Schedule reduction_schedule(std::size_t k, double p) {
  if (k < 2) throw InvalidArgument("reduction_schedule: k must be >= 2");
  if (!(p >= 1.0)) throw InvalidArgument("reduction_schedule: p must be >= 1");
  Schedule s{{}, 1.0 - 1.0 / p, 1.0 - 1.0 / p};
  double q = p;
  for (std::size_t cur = k; cur > 2;) {
    const std::size_t m = cur / 3;
    const std::size_t next = cur - m;
    q = 10.0 * q * q;
    s.steps.push_back({cur, next, m, cur % 3, q, 1.0 - 1.0 / q});
    cur = next;
  }
  s.output_soundness_bound = 1.0 - 1.0 / q;
  return s;
}

double measured_product_optimum(const AcceptanceOperator& pi, const SeesawConfig& seesaw,
                                const BruteForceConfig& brute, bool cross_check) {
  double value = best_product_value_seesaw(pi, seesaw).value;
  if (cross_check) {
    try {
      value = std::max(value, brute_force_product_value(pi, brute));
    } catch (const BudgetExceeded&) {
      // Grid too fine for the budget: seesaw alone.
    }
  }
  return value;
}

std::pair<VerifierSpec, ReductionReport> reduce_to_2(const VerifierSpec& v, double p,
                                                     const ReductionOptions& opt) {
  if (v.k() < 2) throw InvalidArgument("reduce_to_2: k must be >= 2");
  const Schedule sched = reduction_schedule(v.k(), p);

  VerifierSpec current = v;
  std::optional<CertificateSet> honest = opt.honest;
  for (std::size_t i = 0; i < sched.steps.size(); ++i) {
    current = reduce_3k_r_to_2k_r(current);
    if (honest) honest = honest_certificates_lift_grouped(*honest);
  }

  const AcceptanceOperator pi = acceptance_operator(current);
  const double measured =
      measured_product_optimum(pi, opt.seesaw, opt.brute_force, opt.cross_check_brute_force);
  const double completeness = honest ? accept_probability(current, *honest) : measured;

  ReductionReport report{p,
                         sched.input_soundness,
                         sched.output_soundness_bound,
                         completeness,
                         measured,
                         sched.steps,
                         opt.seesaw.seed,
                         current};
  return {current, std::move(report)};
}

io::json to_json(const ScheduleStep& s) {
  return {{"before", s.before}, {"after", s.after}, {"m", s.m}, {"r", s.r}, {"p", s.p}, {"bound", s.bound}};
}

io::json to_json(const ReductionReport& r) {
  io::json trace = io::json::array();
  for (const ScheduleStep& s : r.iteration_trace) trace.push_back(to_json(s));
  io::json j{{"p", r.p},
             {"input_soundness", r.input_soundness},
             {"output_soundness_bound", r.output_soundness_bound},
             {"iterations", r.iteration_trace.size()},
             {"iteration_trace", std::move(trace)},
             {"seed", r.seed}};
  j["completeness_value"] = r.completeness_value ? io::json(*r.completeness_value) : io::json(nullptr);
  j["measured_product_soundness"] =
      r.measured_product_soundness ? io::json(*r.measured_product_soundness) : io::json(nullptr);
  j["reduced_verifier"] = r.reduced ? to_json(*r.reduced) : io::json(nullptr);
  return j;
}

ToyInstance perfect_completeness_instance(std::size_t k, std::size_t q_m, std::size_t q_v,
                                          std::uint64_t seed) {
  const std::size_t n = q_v + k * q_m;
  if (n > kMaxOperatorQubits) throw DimensionCapExceeded("perfect_completeness_instance: too many qubits");
  const SubsystemShape qubits = SubsystemShape::qubits(n);
  const std::size_t dim = qubits.total();
  const std::size_t d = std::size_t{1} << q_m;
  Rng rng(seed);

  // Honest certificates C_i = L_i |0>; I (x) L^dagger sends them to |0...0>.
  std::vector<PureState> certs;
  CMatrix l = CMatrix::identity(std::size_t{1} << q_v);
  for (std::size_t i = 0; i < k; ++i) {
    const UnitaryOperator li = haar_unitary(SubsystemShape({d}), rng);
    certs.push_back(PureState(li.matrix().column(0), SubsystemShape({d})));
    l = kron(l, li.matrix());
  }

  // E fixes |0...0> and scrambles its complement.
  const CMatrix block = haar_unitary(SubsystemShape({dim - 1}), rng).matrix();
  CMatrix e(dim, dim);
  e(0, 0) = 1.0;
  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t j = 1; j < dim; ++j) e(i, j) = block(i - 1, j - 1);
  }

  // Flip the output qubit, then scramble everything else without touching it.
  const std::size_t out = 0;
  circuit::Circuit g(qubits);
  g.gate({out}, circuit::pauli_x());
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != out) rest.push_back(i);
  }
  const SubsystemShape rest_shape = SubsystemShape::qubits(n - 1);
  g.gate(rest, haar_unitary(rest_shape, rng).matrix(), circuit::Condition{{{out, 0}}, {}});
  g.gate(rest, haar_unitary(rest_shape, rng).matrix(), circuit::Condition{{{out, 1}}, {}});

  CMatrix u = g.unitary() * (e * l.adjoint());
  ToyInstance t{VerifierSpec(k, q_m, q_v, UnitaryOperator(std::move(u), qubits), out),
                CertificateSet(std::move(certs))};
  t.product_soundness = 1.0;
  t.p = 1.0;
  t.seed = seed;
  return t;
}

ToyInstance random_soundness_instance(std::size_t k, std::size_t q_m, std::size_t q_v,
                                      std::uint64_t seed, double max_eps) {
  const std::size_t n = q_v + k * q_m;
  if (n > kMaxOperatorQubits) throw DimensionCapExceeded("random_soundness_instance: too many qubits");
  constexpr std::size_t kAttempts = 64;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    Rng rng(s);
    VerifierSpec v(k, q_m, q_v, haar_unitary(SubsystemShape::qubits(n), rng), 0);
    SeesawConfig cfg;
    cfg.seed = s;
    const double eps = measured_product_optimum(acceptance_operator(v), cfg, {}, true);
    if (eps <= max_eps) {
      ToyInstance t{std::move(v), std::nullopt};
      t.product_soundness = eps;
      t.p = 1.0 / (1.0 - eps);
      t.seed = s;
      return t;
    }
  }
  throw Error("random_soundness_instance: no instance with product optimum <= " +
              std::to_string(max_eps) + " in " + std::to_string(kAttempts) + " attempts");
}

}  // namespace qvl

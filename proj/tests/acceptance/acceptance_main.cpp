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

// Runs the acceptance checks and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qvl/indist.hpp"
#include "qvl/measure.hpp"
#include "qvl/qstate.hpp"
#include "qvl/random.hpp"
#include "qvl/reduction.hpp"
#include "qvl/swaptest.hpp"
#include "qvl/verifier.hpp"

namespace qvl {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Tracks the smallest headroom (limit - value) over all samples of one
// quantity; a negative headroom fails the criterion.
class Tracker {
 public:
  explicit Tracker(std::string label) : label_(std::move(label)) {}

  void expect_le(double value, double limit) {
    headroom_ = std::min(headroom_, limit - value);
    if (!(value <= limit)) ok_ = false;
  }
  bool ok() const { return ok_; }
  std::string summary() const {
    std::ostringstream os;
    os << label_ << ": min headroom " << headroom_;
    return os.str();
  }

 private:
  std::string label_;
  double headroom_ = 1e300;
  bool ok_ = true;
};

Outcome merge(std::initializer_list<const Tracker*> ts) {
  Outcome o;
  for (const Tracker* t : ts) {
    o.pass = o.pass && t->ok();
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += t->summary();
  }
  return o;
}

double real_trace_product(const CMatrix& a, const CMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += (a(i, j) * b(j, i)).real();
  }
  return s;
}

Outcome swap_test_agreement() {
  Tracker t("|circuit - formula|");
  Rng rng(101);
  for (std::size_t d : {2, 4}) {
    for (int i = 0; i < 100; ++i) {
      const DensityMatrix r = wishart_density(SubsystemShape({d}), rng);
      const DensityMatrix s = wishart_density(SubsystemShape({d}), rng);
      const double formula = 0.5 + 0.5 * real_trace_product(r.matrix(), s.matrix());
      t.expect_le(std::abs(cswap_circuit(r, s).accept_probability - formula), 1e-10);
    }
  }
  return merge({&t});
}

Outcome mixture_identity() {
  Tracker avg("|avg - I/d^2|"), hel("|helstrom - 1/2|");
  for (std::size_t d : {2, 4, 8}) {
    const CMatrix mixed = CMatrix::identity(d * d) * cplx(1.0 / double(d * d));
    const DensityMatrix a0 = ensemble_average(product_mixture(d));
    const DensityMatrix a1 = ensemble_average(bell_mixture(d));
    avg.expect_le(max_abs_diff(a0.matrix(), mixed), 1e-12);
    avg.expect_le(max_abs_diff(a1.matrix(), mixed), 1e-12);
    hel.expect_le(std::abs(helstrom_optimal_success(a0, a1).success - 0.5), 1e-12);
  }
  return merge({&avg, &hel});
}

Outcome coin_flip_game() {
  Tracker analytic("|analytic - 1/2|"), mc("|empirical - 1/2| - 3 sigma");
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = i % 2 == 0 ? 2 : 4;
    analytic.expect_le(std::abs(analytic_game_success(d, random_binary_povm(SubsystemShape({d, d}), rng)) - 0.5),
                       1e-12);
  }
  const GameReport g = discrimination_game(4, 100000, 7, Povm::binary(sym_projector(4)), "sym");
  mc.expect_le(std::abs(g.empirical_success - 0.5) - 3 * g.sigma, 0.0);
  Outcome o = merge({&analytic, &mc});
  o.detail += "; empirical " + std::to_string(g.empirical_success);
  return o;
}

Outcome bell_product_fidelity() {
  Tracker t("|fidelity - 1/sqrt(d)|");
  for (std::size_t d : {2, 4, 8}) {
    for (const PureState& g : bell_basis(d)) {
      t.expect_le(std::abs(max_product_fidelity(g) - 1.0 / std::sqrt(double(d))), 1e-10);
    }
  }
  return merge({&t});
}

Outcome metric_inequalities() {
  Tracker contract("outcome distance - trace distance");
  Tracker lower("1 - F - D"), upper("D - sqrt(1 - F^2)");
  Rng rng(105);
  for (int i = 0; i < 200; ++i) {
    const SubsystemShape shape({std::size_t(2) + i % 3});
    const DensityMatrix r = wishart_density(shape, rng, i % 4 == 0 ? 1 : 0);
    const DensityMatrix s = wishart_density(shape, rng);
    const Povm m = random_povm(shape, 2 + i % 3, rng);
    const OutcomeDistribution p = outcome_probabilities(m, r), q = outcome_probabilities(m, s);
    double l1 = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) l1 += std::abs(p[k] - q[k]);
    contract.expect_le(0.5 * l1 - trace_norm_half(r - s), 1e-8);
  }
  for (int i = 0; i < 200; ++i) {
    const SubsystemShape shape({std::size_t(1) << (1 + i % 3)});
    const DensityMatrix r = wishart_density(shape, rng, i % 3 == 0 ? 1 : 0);
    const DensityMatrix s = wishart_density(shape, rng);
    const double f = fidelity(r, s), dist = trace_norm_half(r - s);
    lower.expect_le(1.0 - f - dist, 1e-8);
    upper.expect_le(dist - std::sqrt(std::max(0.0, 1.0 - f * f)), 1e-8);
  }
  return merge({&contract, &lower, &upper});
}

Outcome delta_fixed_point() {
  Tracker residual("fixed-point residual"), chain("1/2 + delta/2 - (1 - (1-eps)^2/5)");
  for (int i = 0; i < 1000; ++i) {
    const double eps = i / 999.0;
    const double d = delta_threshold(eps);
    residual.expect_le(std::abs(0.5 + d / 2 - eps - std::sqrt(1 - d * d)), 1e-12);
    chain.expect_le(0.5 + d / 2 - (1 - (1 - eps) * (1 - eps) / 5), 1e-15);
  }
  return merge({&residual, &chain});
}

Outcome reduction_completeness() {
  Tracker t("|1 - accept(honest lift)|");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ToyInstance toy = perfect_completeness_instance(3, 1, 1 + seed % 2, 700 + seed);
    t.expect_le(std::abs(1.0 - accept_probability(toy.verifier, *toy.honest)), 1e-10);
    const VerifierSpec w = reduce_3_to_2(toy.verifier);
    t.expect_le(std::abs(1.0 - accept_probability(w, honest_certificates_lift(*toy.honest))), 1e-10);
  }
  return merge({&t});
}

Outcome reduction_soundness() {
  Tracker t("optimum - (1 - 1/(10p^2))");
  double min_eps = 1.0, max_eps = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ToyInstance hard = random_soundness_instance(3, 1, 1 + seed % 2, 800 + seed);
    min_eps = std::min(min_eps, hard.product_soundness);
    max_eps = std::max(max_eps, hard.product_soundness);
    SeesawConfig sc;
    sc.restarts = 32;
    sc.seed = seed;
    const AcceptanceOperator pi = acceptance_operator(reduce_3_to_2(hard.verifier));
    const double optimum = measured_product_optimum(pi, sc, {}, true);
    t.expect_le(optimum - (1 - 1 / (10 * hard.p * hard.p)), 1e-6);
  }
  Outcome o = merge({&t});
  o.detail += "; input soundness in [" + std::to_string(min_eps) + ", " + std::to_string(max_eps) + "]";
  return o;
}

Outcome symmetric_projector() {
  Tracker ident("projector identities"), accept("|1 - accept(C1 C2 C3 C3)|");
  for (std::size_t d : {2, 3, 4, 8}) {
    const CMatrix p = sym_projector(d).matrix();
    const CMatrix half = (CMatrix::identity(d * d) + swap_operator(d)) * cplx(0.5);
    ident.expect_le(max_abs_diff(p * p, p), 1e-10);
    ident.expect_le(max_abs_diff(p.adjoint(), p), 1e-10);
    ident.expect_le(std::abs(p.trace() - cplx(d * (d + 1) / 2.0)), 1e-10);
    ident.expect_le(max_abs_diff(p, half), 1e-10);
  }
  Rng rng(109);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = i % 2 == 0 ? 2 : 3;
    const Povm m = decomposability_povm(d);
    const SubsystemShape one({d});
    const PureState c3 = haar_state(one, rng);
    const std::vector<PureState> parts{haar_state(one, rng), haar_state(one, rng), c3, c3};
    accept.expect_le(std::abs(1.0 - outcome_probabilities(m, tensor_product(parts))[0]), 1e-10);
  }
  return merge({&ident, &accept});
}

Outcome seesaw_validity() {
  Tracker below("grid - 0.01 - seesaw"), above("seesaw - entangled - 1e-9"), bell("|bell - 0.5|");
  Rng rng(110);
  for (int i = 0; i < 50; ++i) {
    const VerifierSpec v(2, 1, 1 + i % 2, haar_unitary(SubsystemShape::qubits(3 + i % 2), rng), 0);
    const AcceptanceOperator pi = acceptance_operator(v);
    SeesawConfig sc;
    sc.seed = static_cast<std::uint64_t>(i);
    const double s = best_product_value_seesaw(pi, sc).value;
    below.expect_le(brute_force_product_value(pi) - 0.01 - s, 0.0);
    above.expect_le(s - best_entangled_value(pi).value - 1e-9, 0.0);
  }
  const CVector b{0.0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0.0};
  const AcceptanceOperator bell_pi(HermitianOperator(CMatrix::projector(b), SubsystemShape::qubits(2)));
  bell.expect_le(std::abs(best_product_value_seesaw(bell_pi, {}).value - 0.5), 0.01);
  return merge({&below, &above, &bell});
}

Outcome schedule_recurrence() {
  Tracker trace("trace mismatches"), bound("|bound - closed form|");
  for (std::size_t k = 2; k <= 30; ++k) {
    for (double p : {1.0, 1.5, 2.0}) {
      const Schedule s = reduction_schedule(k, p);
      std::size_t cur = k, c = 0, bad = 0;
      while (cur > 2) {
        const std::size_t next = cur - cur / 3;
        if (c >= s.steps.size() || s.steps[c].before != cur || s.steps[c].after != next) ++bad;
        cur = next;
        ++c;
      }
      if (c != s.steps.size()) ++bad;
      trace.expect_le(double(bad), 0.0);
      const double e = std::exp2(double(c));
      bound.expect_le(std::abs(s.output_soundness_bound - (1 - 1 / (std::pow(10.0, e - 1) * std::pow(p, e)))), 1e-12);
    }
  }
  return merge({&trace, &bound});
}

struct Criterion {
  const char* name;
  double time_limit_seconds;  // 0 when the criterion sets none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace qvl

int main() {
  using namespace qvl;
  const Criterion criteria[] = {
      {"C1 swap-test circuit agrees with 1/2 + tr(rho sigma)/2", 5, swap_test_agreement},
      {"C2 both ensemble averages are I/d^2", 1, mixture_identity},
      {"C3 no binary POVM wins the discrimination game", 10, coin_flip_game},
      {"C4 Bell states have product fidelity 1/sqrt(d)", 0, bell_product_fidelity},
      {"C5 contractivity and fidelity sandwich on 200 instances", 10, metric_inequalities},
      {"C6 delta threshold fixed point and chain inequality", 0, delta_fixed_point},
      {"C7 reduced verifier accepts the honest lift", 30, reduction_completeness},
      {"C8 reduced product optimum below 1 - 1/(10 p^2)", 300, reduction_soundness},
      {"C9 symmetric projector and decomposability test", 0, symmetric_projector},
      {"C10 seesaw between grid oracle and entangled optimum", 0, seesaw_validity},
      {"C11 reduction schedule and composed bound", 0, schedule_recurrence},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && secs > c.time_limit_seconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}

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

#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <iostream>

#include "CLI11.hpp"
#include "qvl/errors.hpp"
#include "qvl/indist.hpp"
#include "qvl/random.hpp"
#include "qvl/reduction.hpp"
#include "qvl/swaptest.hpp"
#include "qvl/tolerance.hpp"

namespace qvl::cli {
namespace {

// Reduced circuits up to this size are built densely by `reduce`.
constexpr std::size_t kCliReducedQubits = 10;
constexpr std::size_t kToyPrivateQubits = 2;

double tol(const ExperimentConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const cplx& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

// Acceptance operator of a Haar-random verifier: a generic 0 <= Pi <= I.
AcceptanceOperator random_acceptance_operator(std::size_t k, Rng& rng) {
  const std::size_t n = 1 + k;
  return acceptance_operator(VerifierSpec(k, 1, 1, haar_unitary(SubsystemShape::qubits(n), rng), 0));
}

}  // namespace

io::json ExperimentConfig::to_json() const {
  io::json j{{"subcommand", subcommand}, {"d", d},           {"k", k},
             {"p", p},                   {"trials", trials}, {"seed", seed},
             {"restarts", restarts},     {"dense_cap", dense_cap()}};
  j["tol"] = tol ? io::json(*tol) : io::json(nullptr);
  return j;
}

void run_swap_test(const ExperimentConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  const SubsystemShape one({cfg.d});
  double circuit_gap = 0.0, direct_gap = 0.0, joint_gap = 0.0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const DensityMatrix rho = wishart_density(one, rng);
    const DensityMatrix sigma = wishart_density(one, rng);
    const double formula = swap_test_accept_prob(rho, sigma);
    circuit_gap = std::max(circuit_gap, std::abs(cswap_circuit(rho, sigma).accept_probability - formula));
    direct_gap =
        std::max(direct_gap, std::abs(cswap_circuit_direct(rho, sigma).accept_probability - formula));
    joint_gap =
        std::max(joint_gap, std::abs(swap_test_accept_prob_joint(tensor_product(rho, sigma)) - formula));
  }
  const double t10 = tol(cfg, tol::kConstruct);
  report.add(Check::equal("swap_test.circuit_vs_formula.max_gap", circuit_gap, 0.0, t10));
  report.add(Check::equal("swap_test.direct_vs_formula.max_gap", direct_gap, 0.0, t10));
  report.add(Check::equal("swap_test.joint_vs_formula.max_gap", joint_gap, 0.0, t10));

  const HermitianOperator p = sym_projector(cfg.d);
  const CMatrix& pm = p.matrix();
  CMatrix sq = pm * pm;
  sq -= pm;
  CMatrix half = CMatrix::identity(cfg.d * cfg.d);
  half += swap_operator(cfg.d);
  half *= 0.5;
  half -= pm;
  const double dd = static_cast<double>(cfg.d);
  report.add(Check::equal("swap_test.sym_projector.idempotent", max_abs(sq), 0.0, t10));
  report.add(Check::equal("swap_test.sym_projector.hermitian", pm.hermiticity_error(), 0.0, t10));
  report.add(Check::equal("swap_test.sym_projector.trace", pm.trace().real(), dd * (dd + 1) / 2, t10));
  report.add(Check::equal("swap_test.sym_projector.identity_plus_swap", max_abs(half), 0.0, t10));
  report.set_result("swap_test", {{"pairs", cfg.trials}, {"d", cfg.d}});
}

void run_indist(const ExperimentConfig& cfg, Report& report) {
  const std::size_t d = cfg.d;
  const SubsystemShape both({d, d});
  const DensityMatrix target = DensityMatrix::maximally_mixed(both);
  const DensityMatrix avg0 = ensemble_average(product_mixture(d));
  const DensityMatrix avg1 = ensemble_average(bell_mixture(d));
  const double t12 = tol(cfg, 1e-12);
  const double t10 = tol(cfg, tol::kConstruct);
  report.add(Check::upper_bound("indist.product_average_vs_identity", trace_norm_half(avg0 - target), 0.0, t12));
  report.add(Check::upper_bound("indist.bell_average_vs_identity", trace_norm_half(avg1 - target), 0.0, t12));
  report.add(Check::equal("indist.helstrom_success", helstrom_optimal_success(avg0, avg1).success, 0.5, t12));

  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  double fid_gap = 0.0;
  for (const PureState& g : bell_basis(d)) fid_gap = std::max(fid_gap, std::abs(max_product_fidelity(g) - inv_sqrt_d));
  report.add(Check::equal("indist.bell_max_product_fidelity.max_gap", fid_gap, 0.0, t10));
  if ((d & (d - 1)) == 0) {
    report.add(Check::equal("indist.epsilon_range", epsilon_range_check(d), 1.0 - inv_sqrt_d, t10));
  }

  Rng rng(cfg.seed);
  double povm_gap = 0.0;
  for (int i = 0; i < 20; ++i) {
    povm_gap = std::max(povm_gap, std::abs(analytic_game_success(d, random_binary_povm(both, rng)) - 0.5));
  }
  report.add(Check::equal("indist.random_povm_analytic.max_gap", povm_gap, 0.0, t12));

  const Povm strategy = Povm::binary(sym_projector(d));
  const GameReport game = discrimination_game(d, cfg.trials, cfg.seed, strategy, "sym_projector");
  report.add(Check::equal("indist.game.analytic_success", game.analytic_success, 0.5, t12));
  report.add(Check::equal("indist.game.empirical_success", game.empirical_success, 0.5, 3.0 * game.sigma));
  report.set_result("game", to_json(game));
}

void run_reduce(const ExperimentConfig& cfg, Report& report) {
  const Schedule sched = reduction_schedule(cfg.k, cfg.p);

  // Independent recurrence for the step count and the trace.
  std::size_t steps = 0;
  std::size_t mismatches = 0;
  for (std::size_t cur = cfg.k; cur > 2; ++steps) {
    const std::size_t next = cur - cur / 3;
    if (steps >= sched.steps.size() || sched.steps[steps].before != cur || sched.steps[steps].after != next) {
      ++mismatches;
    }
    cur = next;
  }
  const double c = static_cast<double>(steps);
  const double closed = 1.0 - 1.0 / (std::pow(10.0, std::exp2(c) - 1.0) * std::pow(cfg.p, std::exp2(c)));
  report.add(Check::equal("reduce.schedule.iterations", static_cast<double>(sched.steps.size()), c, 0.0));
  report.add(Check::equal("reduce.schedule.trace_mismatches", static_cast<double>(mismatches), 0.0, 0.0));
  report.add(Check::equal("reduce.composed_bound", sched.output_soundness_bound, closed, tol(cfg, 1e-12)));

  io::json trace = io::json::array();
  for (const ScheduleStep& s : sched.steps) trace.push_back(to_json(s));
  io::json result{{"p", cfg.p},
                  {"input_soundness", sched.input_soundness},
                  {"output_soundness_bound", sched.output_soundness_bound},
                  {"iterations", sched.steps.size()},
                  {"iteration_trace", std::move(trace)},
                  {"seed", cfg.seed}};

  // Dense steps on a toy instance while the reduced circuit stays small.
  std::size_t dense_steps = 0;
  if (cfg.k >= 3 && kToyPrivateQubits + cfg.k <= kCliReducedQubits) {
    const double t10 = tol(cfg, tol::kConstruct);
    ToyInstance toy = perfect_completeness_instance(cfg.k, 1, kToyPrivateQubits, cfg.seed);
    VerifierSpec v = toy.verifier;
    CertificateSet honest = *toy.honest;
    report.add(Check::equal("reduce.completeness.step0", accept_probability(v, honest), 1.0, t10));
    while (v.k() > 2 && v.q_v() + 2 + 2 * v.q_m() * (v.k() - v.k() / 3) <= kCliReducedQubits) {
      const AcceptanceOperator before = acceptance_operator(v);
      const std::size_t q_m = v.q_m();
      v = reduce_3k_r_to_2k_r(v);
      honest = honest_certificates_lift_grouped(honest);
      ++dense_steps;
      const std::string tag = "step" + std::to_string(dense_steps);
      report.add(Check::equal("reduce.completeness." + tag, accept_probability(v, honest), 1.0, t10));
      CMatrix gap = acceptance_operator(v).matrix();
      gap -= reduced_acceptance_operator_structural(before, q_m).matrix();
      report.add(Check::equal("reduce.structural_vs_circuit." + tag, max_abs(gap), 0.0, t10));
    }
    if (cfg.k == 3) {
      ToyInstance hard = random_soundness_instance(3, 1, kToyPrivateQubits, cfg.seed);
      ReductionOptions opt;
      opt.seesaw.seed = cfg.seed;
      opt.seesaw.restarts = cfg.restarts;
      auto [reduced, rr] = reduce_to_2(hard.verifier, hard.p, opt);
      report.add(Check::upper_bound("reduce.soundness.product_optimum", *rr.measured_product_soundness,
                                    soundness_bound(hard.p), 1e-6));
      result["soundness_instance"] = {{"product_soundness", hard.product_soundness},
                                      {"p", hard.p},
                                      {"seed", hard.seed},
                                      {"reduced_product_optimum", *rr.measured_product_soundness},
                                      {"bound", soundness_bound(hard.p)}};
    }
  }
  result["dense_steps"] = dense_steps;
  report.set_result("reduction", std::move(result));
}

void run_optimize(const ExperimentConfig& cfg, Report& report) {
  SeesawConfig sc;
  sc.restarts = cfg.restarts;
  sc.seed = cfg.seed;
  BruteForceConfig bf;
  bf.budget = 100'000;

  // Product optimum of the projector onto (|01> + |10>)/sqrt(2) is 1/2.
  const double h = 1.0 / std::numbers::sqrt2;
  CVector bell{0.0, h, h, 0.0};
  const AcceptanceOperator bell_pi(HermitianOperator(CMatrix::outer(bell, bell), SubsystemShape::qubits(2)));
  report.add(Check::equal("optimize.bell_projector.seesaw", best_product_value_seesaw(bell_pi, sc).value, 0.5, 0.01));
  report.add(Check::equal("optimize.bell_projector.grid", brute_force_product_value(bell_pi, bf), 0.5, 0.01));

  Rng rng(cfg.seed);
  double grid_margin = 1.0, ent_excess = -1.0;
  std::size_t unconverged = 0;
  io::json values = io::json::array();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const AcceptanceOperator pi = random_acceptance_operator(cfg.k, rng);
    sc.seed = derive_seed(cfg.seed, t);
    const SeesawResult s = best_product_value_seesaw(pi, sc);
    const double grid = brute_force_product_value(pi, bf);
    const double ent = best_entangled_value(pi).value;
    grid_margin = std::min(grid_margin, s.value - grid);
    ent_excess = std::max(ent_excess, s.value - ent);
    if (!s.converged) ++unconverged;
    values.push_back({{"seesaw", s.value}, {"grid", grid}, {"entangled", ent}});
  }
  report.add(Check::lower_bound("optimize.seesaw_minus_grid.min", grid_margin, -0.01, 0.0));
  report.add(Check::upper_bound("optimize.seesaw_minus_entangled.max", ent_excess, 0.0, tol(cfg, tol::kClamp)));
  report.set_result("optimize", {{"instances", std::move(values)}, {"unconverged", unconverged}});
}

void run_bounds(const ExperimentConfig& cfg, Report& report) {
  constexpr int kGrid = 1000;
  double residual = 0.0, slack = 1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double eps = static_cast<double>(i) / (kGrid - 1);
    const double delta = delta_threshold(eps);
    residual = std::max(residual, std::abs((0.5 + delta / 2) - (eps + std::sqrt(1 - delta * delta))));
    slack = std::min(slack, (1 - (1 - eps) * (1 - eps) / 5) - (0.5 + delta / 2));
  }
  const double t12 = tol(cfg, 1e-12);
  report.add(Check::upper_bound("bounds.delta.fixed_point_residual", residual, 0.0, t12));
  report.add(Check::lower_bound("bounds.delta.chain_slack.min", slack, 0.0, t12));
  report.add(Check::equal("bounds.soundness_bound", soundness_bound(cfg.p), 1 - 1 / (10 * cfg.p * cfg.p), t12));
  report.set_result("bounds", {{"p", cfg.p}, {"soundness_bound", soundness_bound(cfg.p)}, {"grid_points", kGrid}});
}

Report run_experiment(const ExperimentConfig& cfg) {
  Report report(cfg.subcommand, cfg.to_json());
  const bool all = cfg.subcommand == "all";
  if (all || cfg.subcommand == "swap-test") run_swap_test(cfg, report);
  if (all || cfg.subcommand == "indist") run_indist(cfg, report);
  if (all || cfg.subcommand == "reduce") run_reduce(cfg, report);
  if (all || cfg.subcommand == "optimize") run_optimize(cfg, report);
  if (all || cfg.subcommand == "bounds") run_bounds(cfg, report);
  return report;
}

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"qma_veriflab: checks for multi-certificate quantum verification protocols"};
  app.require_subcommand(1);
  ExperimentConfig cfg;

  const std::pair<const char*, const char*> commands[] = {
      {"swap-test", "C-SWAP circuit against the 1/2 + tr(rho sigma)/2 formula"},
      {"indist", "product vs Bell ensembles and the discrimination game"},
      {"reduce", "certificate-count reduction schedule, completeness and soundness"},
      {"optimize", "seesaw against grid and entangled optimum"},
      {"bounds", "delta threshold and soundness bound arithmetic"},
      {"all", "every experiment above"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--d", cfg.d, "local dimension")->check(CLI::Range(2, 1 << 12));
    sub->add_option("--k", cfg.k, "certificate count")->check(CLI::Range(2, 1000));
    sub->add_option("--p", cfg.p, "soundness parameter p (soundness 1 - 1/p)")->check(CLI::Range(1.0, 1e300));
    sub->add_option("--trials", cfg.trials, "random instances or game rounds")->check(CLI::Range(1, 100'000'000));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--restarts", cfg.restarts, "seesaw restarts")->check(CLI::Range(1, 100'000));
    sub->add_option("--tol", cfg.tol, "tolerance for the exact checks")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    sub->add_option("--csv", cfg.csv, "also write a flat check table as CSV");
    sub->callback([&cfg, n = std::string(name)] { cfg.subcommand = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report("", {});
  try {
    report = run_experiment(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "dimension cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 2;
  }
  report.set_duration(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

  const std::string json = report.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << json;
  } else if (!write_file(cfg.out, json)) {
    std::cerr << "cannot write " << cfg.out << '\n';
    return 2;
  }
  if (!cfg.csv.empty() && !write_file(cfg.csv, report.to_csv())) {
    std::cerr << "cannot write " << cfg.csv << '\n';
    return 2;
  }
  for (const Check& c : report.checks()) {
    if (!c.pass) std::cerr << "FAIL " << c.name << ": measured " << c.measured << '\n';
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace qvl::cli

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

// The experiments behind each qma_veriflab subcommand. Each one appends its
// checks (names prefixed by the subcommand) and results to a Report.

#include <cstdint>
#include <optional>
#include <string>

#include "qvl/report.hpp"

namespace qvl::cli {

struct ExperimentConfig {
  std::string subcommand;
  std::size_t d = 2;
  std::size_t k = 3;
  double p = 2.0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
  /// Replaces the tolerance of the exact (non-statistical) checks.
  std::optional<double> tol;
  std::string out;
  std::string csv;

  io::json to_json() const;
};

void run_swap_test(const ExperimentConfig& cfg, Report& report);
void run_indist(const ExperimentConfig& cfg, Report& report);
void run_reduce(const ExperimentConfig& cfg, Report& report);
void run_optimize(const ExperimentConfig& cfg, Report& report);
void run_bounds(const ExperimentConfig& cfg, Report& report);

/// Runs the subcommand named in cfg ("all" runs every experiment).
Report run_experiment(const ExperimentConfig& cfg);

/// Full command line handling. Returns the process exit status: 0 when every
/// check passes, 1 when one fails, 2 for usage errors.
int run(int argc, const char* const* argv);

}  // namespace qvl::cli

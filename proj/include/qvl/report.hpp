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

// Experiment reports: a config echo, named numeric checks and free-form
// results. Checks are emitted sorted by name so reports do not depend on the
// order in which they were computed.

#include <string>
#include <vector>

#include "qvl/interchange.hpp"

namespace qvl {

struct Check {
  enum class Kind { kEqual, kUpperBound, kLowerBound };

  std::string name;
  Kind kind;
  double measured;
  /// Expected value for kEqual, the bound otherwise.
  double reference;
  double tolerance;
  bool pass;

  /// |measured - expected| <= tol
  static Check equal(std::string name, double measured, double expected, double tol);
  /// measured <= bound + tol
  static Check upper_bound(std::string name, double measured, double bound, double tol);
  /// measured >= bound - tol
  static Check lower_bound(std::string name, double measured, double bound, double tol);
};

const char* kind_name(Check::Kind k);

class Report {
 public:
  Report(std::string command, io::json config);

  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Attach a result section, e.g. a game or reduction report.
  void set_result(const std::string& key, io::json value) { results_[key] = std::move(value); }
  void set_duration(double seconds) { duration_ = seconds; }

  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }

  io::json to_json() const;
  /// One header line plus one row per check.
  std::string to_csv() const;

 private:
  std::vector<Check> sorted() const;

  std::string command_;
  io::json config_;
  io::json results_ = io::json::object();
  std::vector<Check> checks_;
  double duration_ = 0.0;
};

}  // namespace qvl

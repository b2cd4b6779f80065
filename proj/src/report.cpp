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

#include "qvl/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qvl {
namespace {

Check make(std::string name, Check::Kind kind, double measured, double reference, double tol,
           bool pass) {
  // NaN compares false everywhere, so a non-finite measurement never passes.
  return Check{std::move(name), kind, measured, reference, tol, pass && std::isfinite(measured)};
}

}  // namespace

Check Check::equal(std::string name, double measured, double expected, double tol) {
  return make(std::move(name), Kind::kEqual, measured, expected, tol,
              std::abs(measured - expected) <= tol);
}

Check Check::upper_bound(std::string name, double measured, double bound, double tol) {
  return make(std::move(name), Kind::kUpperBound, measured, bound, tol, measured <= bound + tol);
}

Check Check::lower_bound(std::string name, double measured, double bound, double tol) {
  return make(std::move(name), Kind::kLowerBound, measured, bound, tol, measured >= bound - tol);
}

const char* kind_name(Check::Kind k) {
  switch (k) {
    case Check::Kind::kEqual:
      return "equal";
    case Check::Kind::kUpperBound:
      return "upper_bound";
    case Check::Kind::kLowerBound:
      return "lower_bound";
  }
  return "unknown";
}

Report::Report(std::string command, io::json config)
    : command_(std::move(command)), config_(std::move(config)) {}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

io::json Report::to_json() const {
  io::json checks = io::json::array();
  for (const Check& c : sorted()) {
    io::json j{{"name", c.name}, {"kind", kind_name(c.kind)}, {"measured", c.measured}};
    j[c.kind == Check::Kind::kEqual ? "expected" : "bound"] = c.reference;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
  }
  return {{"command", command_}, {"config", config_},     {"checks", std::move(checks)},
          {"results", results_}, {"pass", all_pass()},     {"duration_seconds", duration_}};
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "name,kind,measured,reference,tolerance,pass\n";
  for (const Check& c : sorted()) {
    os << c.name << ',' << kind_name(c.kind) << ',' << c.measured << ',' << c.reference << ','
       << c.tolerance << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace qvl

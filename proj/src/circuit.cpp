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

#include "qvl/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qvl/errors.hpp"
#include "qvl/kernels/kernels.hpp"

namespace qvl::circuit {
namespace {

struct Digits {
  std::vector<std::size_t> strides;
  const SubsystemShape* shape;

  std::size_t digit(std::size_t flat, std::size_t s) const {
    return (flat / strides[s]) % shape->dim(s);
  }
};

void check_subsystem(const SubsystemShape& shape, std::size_t s) {
  if (s >= shape.count()) throw InvalidArgument("circuit: subsystem index out of range");
}

void check_condition(const SubsystemShape& shape, const Condition& cond) {
  for (const Control& c : cond.when) {
    check_subsystem(shape, c.subsystem);
    if (c.value >= shape.dim(c.subsystem)) throw InvalidArgument("circuit: control value out of range");
  }
  for (const AntiControl& c : cond.unless) {
    check_subsystem(shape, c.subsystem);
    if (c.value >= shape.dim(c.subsystem)) throw InvalidArgument("circuit: control value out of range");
  }
}

bool satisfied(const Digits& dg, std::size_t flat, const Condition& cond) {
  for (const Control& c : cond.when) {
    if (dg.digit(flat, c.subsystem) != c.value) return false;
  }
  for (const AntiControl& c : cond.unless) {
    if (dg.digit(flat, c.subsystem) == c.value) return false;
  }
  return true;
}

bool touches(const Condition& cond, std::size_t s) {
  return std::any_of(cond.when.begin(), cond.when.end(),
                     [s](const Control& c) { return c.subsystem == s; }) ||
         std::any_of(cond.unless.begin(), cond.unless.end(),
                     [s](const AntiControl& c) { return c.subsystem == s; });
}

}  // namespace

CMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return CMatrix{{h, h}, {h, -h}};
}

CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

void apply_gate(std::span<cplx> state, const SubsystemShape& shape,
                std::span<const std::size_t> targets, const CMatrix& gate, const Condition& cond) {
  if (state.size() != shape.total()) throw ShapeMismatch("apply_gate: state length mismatch");
  if (targets.empty()) throw InvalidArgument("apply_gate: no targets");
  std::size_t gdim = 1;
  for (std::size_t t : targets) {
    check_subsystem(shape, t);
    if (touches(cond, t)) throw InvalidArgument("apply_gate: target is also a control");
    gdim *= shape.dim(t);
  }
  {
    std::vector<std::size_t> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("apply_gate: duplicate target");
    }
  }
  if (gate.rows() != gdim || gate.cols() != gdim) throw ShapeMismatch("apply_gate: gate dimension mismatch");
  check_condition(shape, cond);

  const Digits dg{shape.strides(), &shape};

  // Single qubit, unconditioned: hand the pair update to the kernel.
  if (targets.size() == 1 && gdim == 2 && cond.empty()) {
    const std::size_t stride = dg.strides[targets[0]];
    kernels::active().pair_update(state.size(), stride,
                                  kernels::detail::raw(gate.data().data()),
                                  kernels::detail::raw(state.data()));
    return;
  }

  // Offsets of every target sub-index, first target most significant.
  std::vector<std::size_t> offsets(gdim, 0);
  {
    std::size_t block = gdim;
    for (std::size_t t : targets) {
      const std::size_t d = shape.dim(t);
      block /= d;
      for (std::size_t g = 0; g < gdim; ++g) offsets[g] += ((g / block) % d) * dg.strides[t];
    }
  }

  CVector in(gdim);
  CVector out(gdim);
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    bool base = true;
    for (std::size_t t : targets) {
      if (dg.digit(flat, t) != 0) {
        base = false;
        break;
      }
    }
    if (!base || !satisfied(dg, flat, cond)) continue;
    for (std::size_t g = 0; g < gdim; ++g) in[g] = state[flat + offsets[g]];
    for (std::size_t g = 0; g < gdim; ++g) out[g] = kernels::dotu(gate.row(g), in);
    for (std::size_t g = 0; g < gdim; ++g) state[flat + offsets[g]] = out[g];
  }
}

void apply_swap(std::span<cplx> state, const SubsystemShape& shape, std::size_t a, std::size_t b,
                const Condition& cond) {
  if (state.size() != shape.total()) throw ShapeMismatch("apply_swap: state length mismatch");
  check_subsystem(shape, a);
  check_subsystem(shape, b);
  if (a == b) return;
  if (shape.dim(a) != shape.dim(b)) throw ShapeMismatch("apply_swap: subsystem dimensions differ");
  if (touches(cond, a) || touches(cond, b)) {
    throw InvalidArgument("apply_swap: swapped subsystem is also a control");
  }
  check_condition(shape, cond);
  const Digits dg{shape.strides(), &shape};
  const std::size_t sa = dg.strides[a];
  const std::size_t sb = dg.strides[b];
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    const std::size_t da = dg.digit(flat, a);
    const std::size_t db = dg.digit(flat, b);
    if (da <= db || !satisfied(dg, flat, cond)) continue;
    const std::size_t partner = flat - da * sa - db * sb + db * sa + da * sb;
    std::swap(state[flat], state[partner]);
  }
}

double probability(std::span<const cplx> state, const SubsystemShape& shape,
                   std::size_t subsystem, std::size_t value) {
  if (state.size() != shape.total()) throw ShapeMismatch("probability: state length mismatch");
  check_subsystem(shape, subsystem);
  const Digits dg{shape.strides(), &shape};
  double p = 0.0;
  for (std::size_t flat = 0; flat < state.size(); ++flat) {
    if (dg.digit(flat, subsystem) == value) p += std::norm(state[flat]);
  }
  return p;
}

Circuit& Circuit::gate(std::vector<std::size_t> targets, CMatrix matrix, Condition cond) {
  ops_.emplace_back(GateOp{std::move(targets), std::move(matrix), std::move(cond)});
  return *this;
}

Circuit& Circuit::swap(std::size_t a, std::size_t b, Condition cond) {
  ops_.emplace_back(SwapOp{a, b, std::move(cond)});
  return *this;
}

void Circuit::run(std::span<cplx> state) const {
  for (const auto& op : ops_) {
    if (const auto* g = std::get_if<GateOp>(&op)) {
      apply_gate(state, shape_, g->targets, g->matrix, g->cond);
    } else {
      const auto& s = std::get<SwapOp>(op);
      apply_swap(state, shape_, s.a, s.b, s.cond);
    }
  }
}

CMatrix Circuit::unitary() const {
  const std::size_t n = shape_.total();
  CMatrix u(n, n);
  CVector col(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(col.begin(), col.end(), cplx{});
    col[c] = 1.0;
    run(col);
    u.set_column(c, col);
  }
  return u;
}

}  // namespace qvl::circuit

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

// State-vector simulation over a SubsystemShape. A Circuit is an ordered list
// of (optionally controlled) dense gates and subsystem swaps; it can run on a
// state or be expanded to its full unitary, column by column.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qvl/matrix.hpp"
#include "qvl/shape.hpp"

namespace qvl::circuit {

/// Condition "subsystem holds basis value `value`".
struct Control {
  std::size_t subsystem;
  std::size_t value;
};

/// Condition "subsystem does NOT hold basis value `value`".
struct AntiControl {
  std::size_t subsystem;
  std::size_t value;
};

struct Condition {
  std::vector<Control> when;
  std::vector<AntiControl> unless;
  bool empty() const { return when.empty() && unless.empty(); }
};

CMatrix hadamard();
CMatrix pauli_x();

/// Apply `gate` to the listed subsystems (gate dimension = product of their
/// dims, first listed subsystem most significant) on the branch selected by
/// `cond`.
void apply_gate(std::span<cplx> state, const SubsystemShape& shape,
                std::span<const std::size_t> targets, const CMatrix& gate,
                const Condition& cond = {});

/// Exchange the contents of subsystems a and b (equal dims) on the branch
/// selected by `cond`.
void apply_swap(std::span<cplx> state, const SubsystemShape& shape, std::size_t a, std::size_t b,
                const Condition& cond = {});

/// Probability that `subsystem` reads `value` in the computational basis.
double probability(std::span<const cplx> state, const SubsystemShape& shape,
                   std::size_t subsystem, std::size_t value);

class Circuit {
 public:
  explicit Circuit(SubsystemShape shape) : shape_(std::move(shape)) {}

  const SubsystemShape& shape() const { return shape_; }

  Circuit& gate(std::vector<std::size_t> targets, CMatrix matrix, Condition cond = {});
  Circuit& swap(std::size_t a, std::size_t b, Condition cond = {});

  void run(std::span<cplx> state) const;
  CMatrix unitary() const;
  std::size_t size() const { return ops_.size(); }

 private:
  struct GateOp {
    std::vector<std::size_t> targets;
    CMatrix matrix;
    Condition cond;
  };
  struct SwapOp {
    std::size_t a;
    std::size_t b;
    Condition cond;
  };
  SubsystemShape shape_;
  std::vector<std::variant<GateOp, SwapOp>> ops_;
};

}  // namespace qvl::circuit

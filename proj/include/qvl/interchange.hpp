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

// JSON interchange for states and operators:
//   {"dims": [d0, d1, ...], "data": [[re, im], ...]}
// `data` is row-major. A vector carries prod(dims) entries, a square matrix
// prod(dims)^2. Doubles are written with round-trip precision.

#include <json.hpp>
#include <span>
#include <string>

#include "qvl/qstate.hpp"

namespace qvl::io {

using nlohmann::json;

json encode(std::span<const cplx> data, const SubsystemShape& shape);
json encode(const CMatrix& m, const SubsystemShape& shape);

json to_json(const PureState& psi);
json to_json(const DensityMatrix& rho);
json to_json(const HermitianOperator& a);
json to_json(const UnitaryOperator& u);

SubsystemShape decode_shape(const json& j);
/// Throws InvalidArgument on malformed input.
CVector decode_vector(const json& j);
CMatrix decode_matrix(const json& j);

PureState pure_state_from_json(const json& j);
DensityMatrix density_matrix_from_json(const json& j);
HermitianOperator hermitian_from_json(const json& j);
UnitaryOperator unitary_from_json(const json& j);

}  // namespace qvl::io

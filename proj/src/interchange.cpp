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

#include "qvl/interchange.hpp"

#include "qvl/errors.hpp"

namespace qvl::io {
namespace {

json encode_entries(std::span<const cplx> data) {
  json arr = json::array();
  for (const cplx& z : data) arr.push_back(json::array({z.real(), z.imag()}));
  return arr;
}

CVector decode_entries(const json& j, std::size_t expected) {
  if (!j.contains("data") || !j["data"].is_array()) {
    throw InvalidArgument("interchange: missing \"data\" array");
  }
  const json& data = j["data"];
  if (data.size() != expected) {
    throw InvalidArgument("interchange: expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(data.size()));
  }
  CVector out;
  out.reserve(expected);
  for (const json& e : data) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidArgument("interchange: each entry must be [re, im]");
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

json encode(std::span<const cplx> data, const SubsystemShape& shape) {
  return json{{"dims", std::vector<std::size_t>(shape.dims().begin(), shape.dims().end())},
              {"data", encode_entries(data)}};
}

json encode(const CMatrix& m, const SubsystemShape& shape) { return encode(m.data(), shape); }

json to_json(const PureState& psi) { return encode(psi.amplitudes(), psi.shape()); }
json to_json(const DensityMatrix& rho) { return encode(rho.matrix(), rho.shape()); }
json to_json(const HermitianOperator& a) { return encode(a.matrix(), a.shape()); }
json to_json(const UnitaryOperator& u) { return encode(u.matrix(), u.shape()); }

SubsystemShape decode_shape(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array()) {
    throw InvalidArgument("interchange: missing \"dims\" array");
  }
  std::vector<std::size_t> dims;
  for (const json& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 2) {
      throw InvalidArgument("interchange: dims must be integers >= 2");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return SubsystemShape(std::move(dims));
}

CVector decode_vector(const json& j) { return decode_entries(j, decode_shape(j).total()); }

CMatrix decode_matrix(const json& j) {
  const std::size_t n = decode_shape(j).total();
  return CMatrix(n, n, decode_entries(j, n * n));
}

PureState pure_state_from_json(const json& j) { return PureState(decode_vector(j), decode_shape(j)); }

DensityMatrix density_matrix_from_json(const json& j) {
  return DensityMatrix(decode_matrix(j), decode_shape(j));
}

HermitianOperator hermitian_from_json(const json& j) {
  return HermitianOperator(decode_matrix(j), decode_shape(j));
}

UnitaryOperator unitary_from_json(const json& j) {
  return UnitaryOperator(decode_matrix(j), decode_shape(j));
}

}  // namespace qvl::io

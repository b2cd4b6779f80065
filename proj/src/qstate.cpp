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

#include "qvl/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qvl/errors.hpp"
#include "qvl/tolerance.hpp"

namespace qvl {
namespace {

// Eigenvalues this small are eigensolver noise. Taking their square root
// would inject O(1e-8) garbage into fidelities and purifications.
constexpr double kSpectralNoiseFloor = 1e-14;

void require_square(const CMatrix& m, const SubsystemShape& shape, const char* what) {
  if (!m.square() || m.rows() != shape.total()) {
    throw ShapeMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " but shape " + shape.to_string() +
                        " has total dimension " + std::to_string(shape.total()));
  }
}

// old flat index -> new flat index under the subsystem permutation.
std::vector<std::size_t> permutation_index_map(const SubsystemShape& shape,
                                               std::span<const std::size_t> perm) {
  validate_permutation(perm, shape.count());
  const SubsystemShape target = shape.permuted(perm);
  const std::vector<std::size_t> new_strides = target.strides();
  const std::size_t n = shape.count();
  std::vector<std::size_t> map(shape.total());
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t flat = 0; flat < shape.total(); ++flat) {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < n; ++s) idx += digits[s] * new_strides[perm[s]];
    map[flat] = idx;
    for (std::size_t s = n; s-- > 0;) {
      if (++digits[s] < shape.dim(s)) break;
      digits[s] = 0;
    }
  }
  return map;
}

// Positive part of a spectrum: columns V_+ scaled by sqrt(lambda).
CMatrix sqrt_factor(const CMatrix& rho) {
  linalg::EigenSystem es = linalg::eigh(rho);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    if (es.values[i] < -tol::kClamp) {
      throw InvariantViolation("fidelity: input is not positive semidefinite");
    }
    if (es.values[i] > kSpectralNoiseFloor) keep.push_back(i);
  }
  CMatrix f(rho.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const double s = std::sqrt(es.values[keep[c]]);
    for (std::size_t r = 0; r < rho.rows(); ++r) f(r, c) = es.vectors(r, keep[c]) * s;
  }
  return f;
}

}  // namespace

// ---------------------------------------------------------------- PureState

PureState::PureState(CVector amplitudes, SubsystemShape shape)
    : amplitudes_(std::move(amplitudes)), shape_(std::move(shape)) {
  if (amplitudes_.size() != shape_.total()) {
    throw ShapeMismatch("PureState: amplitude count " + std::to_string(amplitudes_.size()) +
                        " != shape total " + std::to_string(shape_.total()));
  }
  const double n = norm(amplitudes_);
  if (std::abs(n - 1.0) > tol::kConstruct) {
    throw InvariantViolation("PureState: norm must be 1 within 1e-10 (got " + std::to_string(n) +
                             ")");
  }
}

PureState PureState::basis(SubsystemShape shape, std::size_t index) {
  if (index >= shape.total()) throw InvalidArgument("PureState::basis: index out of range");
  CVector v(shape.total());
  v[index] = 1.0;
  return PureState(std::move(v), std::move(shape));
}

PureState PureState::normalized(CVector amplitudes, SubsystemShape shape) {
  const double n = norm(amplitudes);
  if (!(n > 0.0)) throw InvariantViolation("PureState::normalized: zero vector");
  for (auto& a : amplitudes) a /= n;
  return PureState(std::move(amplitudes), std::move(shape));
}

DensityMatrix PureState::density() const {
  return DensityMatrix::assume_valid(CMatrix::projector(amplitudes_), shape_);
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(CMatrix entries, SubsystemShape shape)
    : DensityMatrix(std::move(entries), std::move(shape), true) {}

DensityMatrix::DensityMatrix(CMatrix entries, SubsystemShape shape, bool checked)
    : entries_(std::move(entries)), shape_(std::move(shape)) {
  require_square(entries_, shape_, "DensityMatrix");
  if (!checked) return;
  if (entries_.hermiticity_error() > tol::kConstruct) {
    throw InvariantViolation("DensityMatrix: not Hermitian within 1e-10");
  }
  const cplx tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol::kConstruct) {
    throw InvariantViolation("DensityMatrix: trace must be 1 within 1e-10 (got " +
                             std::to_string(tr.real()) + ")");
  }
  const linalg::EigenSystem es = linalg::eigh(entries_);
  if (es.values.back() < -tol::kConstruct) {
    throw InvariantViolation("DensityMatrix: negative eigenvalue " +
                             std::to_string(es.values.back()));
  }
}

DensityMatrix DensityMatrix::assume_valid(CMatrix entries, SubsystemShape shape) {
  return DensityMatrix(std::move(entries), std::move(shape), false);
}

DensityMatrix DensityMatrix::maximally_mixed(SubsystemShape shape) {
  CMatrix m = CMatrix::identity(shape.total());
  m *= 1.0 / static_cast<double>(shape.total());
  return assume_valid(std::move(m), std::move(shape));
}

// -------------------------------------------------------- HermitianOperator

HermitianOperator::HermitianOperator(CMatrix entries, SubsystemShape shape)
    : shape_(std::move(shape)) {
  require_square(entries, shape_, "HermitianOperator");
  if (entries.hermiticity_error() > tol::kConstruct) {
    throw InvariantViolation("HermitianOperator: not Hermitian within 1e-10");
  }
  entries_ = entries.hermitian_part();
}

HermitianOperator HermitianOperator::identity(SubsystemShape shape) {
  const std::size_t n = shape.total();
  return HermitianOperator(CMatrix::identity(n), std::move(shape));
}

HermitianOperator HermitianOperator::zero(SubsystemShape shape) {
  const std::size_t n = shape.total();
  return HermitianOperator(CMatrix(n, n), std::move(shape));
}

double HermitianOperator::expectation(std::span<const cplx> v) const {
  return inner(v, matvec(entries_, v)).real();
}

// ---------------------------------------------------------- UnitaryOperator

UnitaryOperator::UnitaryOperator(CMatrix entries, SubsystemShape shape)
    : entries_(std::move(entries)), shape_(std::move(shape)) {
  require_square(entries_, shape_, "UnitaryOperator");
  const CMatrix gram = adjoint_times(entries_, entries_) - CMatrix::identity(entries_.rows());
  if (gram.frobenius_norm() > tol::kUnitary) {
    throw InvariantViolation("UnitaryOperator: U^dagger U != I within 1e-9");
  }
}

UnitaryOperator UnitaryOperator::identity(SubsystemShape shape) {
  const std::size_t n = shape.total();
  return UnitaryOperator(CMatrix::identity(n), std::move(shape));
}

// ---------------------------------------------------------------- algebra

HermitianOperator operator-(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("DensityMatrix -: shape mismatch");
  return HermitianOperator(a.matrix() - b.matrix(), a.shape());
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("HermitianOperator +: shape mismatch");
  return HermitianOperator(a.matrix() + b.matrix(), a.shape());
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("HermitianOperator -: shape mismatch");
  return HermitianOperator(a.matrix() - b.matrix(), a.shape());
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(a.matrix() * cplx(s), a.shape());
}

PureState tensor_product(const PureState& a, const PureState& b) {
  SubsystemShape shape = a.shape().concat(b.shape());
  return PureState::normalized(kron(a.amplitudes(), b.amplitudes()), std::move(shape));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  SubsystemShape shape = a.shape().concat(b.shape());
  return DensityMatrix::assume_valid(kron(a.matrix(), b.matrix()), std::move(shape));
}

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b) {
  SubsystemShape shape = a.shape().concat(b.shape());
  return HermitianOperator(kron(a.matrix(), b.matrix()), std::move(shape));
}

UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b) {
  SubsystemShape shape = a.shape().concat(b.shape());
  return UnitaryOperator(kron(a.matrix(), b.matrix()), std::move(shape));
}

PureState tensor_product(std::span<const PureState> factors) {
  if (factors.empty()) throw InvalidArgument("tensor_product: no factors");
  PureState acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor_product(acc, factors[i]);
  return acc;
}

// ------------------------------------------------------------- permutation

CVector permute_vector(std::span<const cplx> v, const SubsystemShape& shape,
                       std::span<const std::size_t> perm) {
  if (v.size() != shape.total()) throw ShapeMismatch("permute_vector: length mismatch");
  const std::vector<std::size_t> map = permutation_index_map(shape, perm);
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
  return out;
}

CMatrix permute_matrix(const CMatrix& m, const SubsystemShape& shape,
                       std::span<const std::size_t> perm) {
  require_square(m, shape, "permute_matrix");
  const std::vector<std::size_t> map = permutation_index_map(shape, perm);
  const std::size_t n = m.rows();
  CMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(map[r], map[c]) = m(r, c);
  }
  return out;
}

PureState permute_subsystems(const PureState& x, std::span<const std::size_t> perm) {
  return PureState(permute_vector(x.amplitudes(), x.shape(), perm), x.shape().permuted(perm));
}

DensityMatrix permute_subsystems(const DensityMatrix& x, std::span<const std::size_t> perm) {
  return DensityMatrix::assume_valid(permute_matrix(x.matrix(), x.shape(), perm),
                                     x.shape().permuted(perm));
}

HermitianOperator permute_subsystems(const HermitianOperator& x,
                                     std::span<const std::size_t> perm) {
  return HermitianOperator(permute_matrix(x.matrix(), x.shape(), perm),
                           x.shape().permuted(perm));
}

// ------------------------------------------------------------ partial trace

CMatrix partial_trace(const CMatrix& m, const SubsystemShape& shape,
                      std::span<const std::size_t> keep) {
  require_square(m, shape, "partial_trace");
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InvalidArgument("partial_trace: duplicate subsystem index");
  }
  if (kept.back() >= shape.count()) throw InvalidArgument("partial_trace: index out of range");

  // Move kept subsystems to the front (in order), traced ones behind them.
  std::vector<std::size_t> order = kept;
  for (std::size_t s = 0; s < shape.count(); ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) order.push_back(s);
  }
  std::vector<std::size_t> perm(shape.count());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  const CMatrix moved = kept.size() == shape.count() ? m : permute_matrix(m, shape, perm);

  std::size_t dk = 1;
  for (std::size_t s : kept) dk *= shape.dim(s);
  const std::size_t dt = shape.total() / dk;
  CMatrix out(dk, dk);
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t b = 0; b < dk; ++b) {
      cplx sum = 0.0;
      for (std::size_t t = 0; t < dt; ++t) sum += moved(a * dt + t, b * dt + t);
      out(a, b) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  CMatrix reduced = partial_trace(rho.matrix(), rho.shape(), keep);
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  return DensityMatrix::assume_valid(std::move(reduced), rho.shape().subset(kept));
}

// ----------------------------------------------------------------- metrics

PureState purify(const DensityMatrix& rho) {
  const linalg::EigenSystem es = linalg::eigh(rho.matrix());
  const std::size_t d = rho.dim();
  CVector psi(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (es.values[i] < -tol::kClamp) {
      throw InvariantViolation("purify: input has a negative eigenvalue");
    }
    if (es.values[i] <= kSpectralNoiseFloor) continue;
    const double w = std::sqrt(es.values[i]);
    for (std::size_t a = 0; a < d; ++a) {
      const cplx va = es.vectors(a, i) * w;
      if (va == cplx{}) continue;
      for (std::size_t b = 0; b < d; ++b) psi[a * d + b] += va * es.vectors(b, i);
    }
  }
  return PureState::normalized(std::move(psi), rho.shape().concat(rho.shape()));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.shape() != sigma.shape()) throw ShapeMismatch("fidelity: shape mismatch");
  // F = || sqrt(rho) sqrt(sigma) ||_1, evaluated on the supports only.
  const CMatrix a = sqrt_factor(rho.matrix());
  const CMatrix b = sqrt_factor(sigma.matrix());
  if (a.cols() == 0 || b.cols() == 0) return 0.0;
  const CMatrix overlap = adjoint_times(a, b);
  const linalg::Svd s = linalg::svd(overlap);
  const double f = std::accumulate(s.singular_values.begin(), s.singular_values.end(), 0.0);
  return std::clamp(f, 0.0, 1.0);
}

double trace_norm_half(const HermitianOperator& a) {
  const linalg::EigenSystem es = linalg::eigh(a.matrix());
  double s = 0.0;
  for (double v : es.values) s += std::abs(v);
  return 0.5 * s;
}

linalg::EigenSystem hermitian_eigensystem(const HermitianOperator& a) {
  return linalg::eigh(a.matrix());
}

CVector SchmidtDecomposition::reconstruct() const {
  const std::size_t da = left.rows();
  const std::size_t db = right.rows();
  CVector v(da * db);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t a = 0; a < da; ++a) {
      const cplx la = coefficients[i] * left(a, i);
      for (std::size_t b = 0; b < db; ++b) v[a * db + b] += la * right(b, i);
    }
  }
  return v;
}

SchmidtDecomposition schmidt_decomposition(const PureState& psi) {
  if (psi.shape().count() != 2) {
    throw InvalidArgument("schmidt_decomposition: state must have exactly 2 subsystems, got " +
                          psi.shape().to_string());
  }
  const std::size_t da = psi.shape().dim(0);
  const std::size_t db = psi.shape().dim(1);
  const CMatrix amp(da, db, psi.amplitudes());
  linalg::Svd s = linalg::svd(amp);
  SchmidtDecomposition out;
  out.coefficients = std::move(s.singular_values);
  out.left = std::move(s.u);
  // amp = U S V^dagger, so the right Schmidt vectors are conj(V) columns.
  out.right = CMatrix(s.v.rows(), s.v.cols());
  for (std::size_t r = 0; r < s.v.rows(); ++r) {
    for (std::size_t c = 0; c < s.v.cols(); ++c) out.right(r, c) = std::conj(s.v(r, c));
  }
  return out;
}

double max_product_fidelity(const PureState& psi) {
  return schmidt_decomposition(psi).coefficients.front();
}

}  // namespace qvl

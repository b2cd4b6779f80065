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

// States and operators on tensor-product spaces, plus the distance measures
// used throughout: partial trace, purification, fidelity, half trace norm and
// Schmidt decomposition.

#include <cstddef>
#include <span>
#include <vector>

#include "qvl/linalg.hpp"
#include "qvl/matrix.hpp"
#include "qvl/shape.hpp"

namespace qvl {

class DensityMatrix;

/// Unit vector over a SubsystemShape.
class PureState {
 public:
  /// Throws InvariantViolation unless |amplitudes| = 1 within 1e-10.
  PureState(CVector amplitudes, SubsystemShape shape);

  static PureState basis(SubsystemShape shape, std::size_t index);
  /// Rescales to unit norm; throws on the zero vector.
  static PureState normalized(CVector amplitudes, SubsystemShape shape);

  const CVector& amplitudes() const { return amplitudes_; }
  const SubsystemShape& shape() const { return shape_; }
  std::size_t dim() const { return amplitudes_.size(); }

  DensityMatrix density() const;

 private:
  CVector amplitudes_;
  SubsystemShape shape_;
};

/// Positive semidefinite, trace-one, Hermitian matrix.
class DensityMatrix {
 public:
  /// Checks Hermiticity, unit trace and eigenvalues >= -1e-10.
  DensityMatrix(CMatrix entries, SubsystemShape shape);

  /// Skips the eigenvalue check; for values that are density matrices by
  /// construction (projectors of unit vectors, partial traces, mixtures).
  static DensityMatrix assume_valid(CMatrix entries, SubsystemShape shape);
  static DensityMatrix maximally_mixed(SubsystemShape shape);

  const CMatrix& matrix() const { return entries_; }
  const SubsystemShape& shape() const { return shape_; }
  std::size_t dim() const { return entries_.rows(); }

 private:
  DensityMatrix(CMatrix entries, SubsystemShape shape, bool checked);
  CMatrix entries_;
  SubsystemShape shape_;
};

class HermitianOperator {
 public:
  /// Throws unless Hermitian within 1e-10. Stores the exact Hermitian part.
  HermitianOperator(CMatrix entries, SubsystemShape shape);
  explicit HermitianOperator(const DensityMatrix& rho)
      : HermitianOperator(rho.matrix(), rho.shape()) {}

  static HermitianOperator identity(SubsystemShape shape);
  static HermitianOperator zero(SubsystemShape shape);

  const CMatrix& matrix() const { return entries_; }
  const SubsystemShape& shape() const { return shape_; }
  std::size_t dim() const { return entries_.rows(); }

  /// <v|A|v>, real part.
  double expectation(std::span<const cplx> v) const;

 private:
  CMatrix entries_;
  SubsystemShape shape_;
};

class UnitaryOperator {
 public:
  /// Throws unless ||U^dagger U - I||_F <= 1e-9.
  UnitaryOperator(CMatrix entries, SubsystemShape shape);

  static UnitaryOperator identity(SubsystemShape shape);

  const CMatrix& matrix() const { return entries_; }
  const SubsystemShape& shape() const { return shape_; }
  std::size_t dim() const { return entries_.rows(); }

  CVector apply(std::span<const cplx> v) const { return matvec(entries_, v); }

 private:
  CMatrix entries_;
  SubsystemShape shape_;
};

HermitianOperator operator-(const DensityMatrix& a, const DensityMatrix& b);
HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator operator*(double s, const HermitianOperator& a);

PureState tensor_product(const PureState& a, const PureState& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b);
UnitaryOperator tensor_product(const UnitaryOperator& a, const UnitaryOperator& b);
PureState tensor_product(std::span<const PureState> factors);

/// Subsystem i moves to position perm[i].
PureState permute_subsystems(const PureState& x, std::span<const std::size_t> perm);
DensityMatrix permute_subsystems(const DensityMatrix& x, std::span<const std::size_t> perm);
HermitianOperator permute_subsystems(const HermitianOperator& x,
                                     std::span<const std::size_t> perm);
CVector permute_vector(std::span<const cplx> v, const SubsystemShape& shape,
                       std::span<const std::size_t> perm);
CMatrix permute_matrix(const CMatrix& m, const SubsystemShape& shape,
                       std::span<const std::size_t> perm);

/// Trace out every subsystem not listed in `keep`. Kept subsystems retain
/// their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
CMatrix partial_trace(const CMatrix& m, const SubsystemShape& shape,
                      std::span<const std::size_t> keep);

/// sum_i sqrt(p_i) |v_i>|v_i> on shape.concat(shape).
PureState purify(const DensityMatrix& rho);

/// tr sqrt(sqrt(rho) sigma sqrt(rho))
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1/2) tr |A|: half the sum of absolute eigenvalues.
double trace_norm_half(const HermitianOperator& a);

linalg::EigenSystem hermitian_eigensystem(const HermitianOperator& a);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, min(dA, dB) entries
  CMatrix left;                      // dA x r, orthonormal columns
  CMatrix right;                     // dB x r, orthonormal columns

  /// sum_i c_i |left_i> (x) |right_i>
  CVector reconstruct() const;
};

/// Requires a two-subsystem shape.
SchmidtDecomposition schmidt_decomposition(const PureState& psi);

/// max over product pure states of |<psi|phi (x) chi>|: the largest Schmidt
/// coefficient.
double max_product_fidelity(const PureState& psi);

}  // namespace qvl

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

// Dense decompositions. Backed by Eigen; callers only see CMatrix.

#include <functional>
#include <vector>

#include "qvl/matrix.hpp"

namespace qvl::linalg {

/// Eigenvalues in descending order; column i of `vectors` belongs to values[i].
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;

  /// V diag(f(values)) V^dagger
  CMatrix reconstruct(const std::function<double(double)>& f) const;
  CMatrix reconstruct() const;
};

/// Eigensystem of the Hermitian part of `a`. The caller checks Hermiticity.
EigenSystem eigh(const CMatrix& a);

/// Largest eigenvalue and its eigenvector.
std::pair<double, CVector> top_eigenpair(const CMatrix& a);

/// Largest eigenvalue only.
double max_eigenvalue(const CMatrix& a);

/// Thin SVD: a = u diag(s) v^dagger, singular values descending.
struct Svd {
  std::vector<double> singular_values;
  CMatrix u;
  CMatrix v;
};

Svd svd(const CMatrix& a);

/// Q factor of a QR decomposition with the diagonal of R made real positive.
/// For a Ginibre input this is Haar distributed.
CMatrix qr_unitary(const CMatrix& a);

/// f(A) for Hermitian A through its eigensystem, with eigenvalues in
/// [-tol::kClamp, 0) clamped to 0 and anything more negative rejected.
CMatrix psd_function(const CMatrix& a, const std::function<double(double)>& f,
                     const char* what);

CMatrix psd_sqrt(const CMatrix& a);

}  // namespace qvl::linalg

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

#include "qvl/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "qvl/errors.hpp"
#include "qvl/tolerance.hpp"

namespace qvl::linalg {
namespace {

using EMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EMatrix> view(const CMatrix& a) {
  return {a.data().data(), static_cast<Eigen::Index>(a.rows()),
          static_cast<Eigen::Index>(a.cols())};
}

CMatrix to_cmatrix(const Eigen::MatrixXcd& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace

CMatrix EigenSystem::reconstruct(const std::function<double(double)>& f) const {
  const std::size_t n = vectors.rows();
  const std::size_t m = values.size();
  CMatrix scaled(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) scaled(r, c) = vectors(r, c) * f(values[c]);
  }
  return scaled * vectors.adjoint();
}

CMatrix EigenSystem::reconstruct() const {
  return reconstruct([](double x) { return x; });
}

EigenSystem eigh(const CMatrix& a) {
  if (!a.square()) throw ShapeMismatch("eigh: matrix not square");
  const Eigen::MatrixXcd h = view(a.hermitian_part());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw Error("eigh: eigensolver did not converge");
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  const std::size_t n = a.rows();
  EigenSystem out{std::vector<double>(n), CMatrix(n, n)};
  // Eigen returns ascending order.
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Index src = static_cast<Eigen::Index>(n - 1 - i);
    out.values[i] = evals(src);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = evecs(static_cast<Eigen::Index>(r), src);
  }
  return out;
}

std::pair<double, CVector> top_eigenpair(const CMatrix& a) {
  EigenSystem es = eigh(a);
  return {es.values.front(), es.vectors.column(0)};
}

double max_eigenvalue(const CMatrix& a) {
  if (!a.square()) throw ShapeMismatch("max_eigenvalue: matrix not square");
  const Eigen::MatrixXcd h = view(a.hermitian_part());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("max_eigenvalue: eigensolver did not converge");
  return solver.eigenvalues()(solver.eigenvalues().size() - 1);
}

Svd svd(const CMatrix& a) {
  const Eigen::MatrixXcd m = view(a);
  Eigen::BDCSVD<Eigen::MatrixXcd> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out;
  const auto& s = solver.singularValues();
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.u = to_cmatrix(solver.matrixU());
  out.v = to_cmatrix(solver.matrixV());
  return out;
}

CMatrix qr_unitary(const CMatrix& a) {
  if (!a.square()) throw ShapeMismatch("qr_unitary: matrix not square");
  const Eigen::MatrixXcd m = view(a);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    const double mag = std::abs(d);
    const cplx phase = mag > 0.0 ? d / mag : cplx(1.0);
    q.col(i) *= phase;
  }
  return to_cmatrix(q);
}

CMatrix psd_function(const CMatrix& a, const std::function<double(double)>& f,
                     const char* what) {
  EigenSystem es = eigh(a);
  for (double& v : es.values) {
    if (v < -tol::kClamp) {
      throw InvariantViolation(std::string(what) + ": operator is not positive semidefinite (eigenvalue " +
                               std::to_string(v) + ")");
    }
    v = std::max(v, 0.0);
  }
  return es.reconstruct(f);
}

CMatrix psd_sqrt(const CMatrix& a) {
  return psd_function(a, [](double x) { return std::sqrt(x); }, "psd_sqrt");
}

}  // namespace qvl::linalg

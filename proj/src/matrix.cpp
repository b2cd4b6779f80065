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

#include "qvl/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qvl/errors.hpp"
#include "qvl/kernels/kernels.hpp"

namespace qvl {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw ShapeMismatch("CMatrix: data size does not match shape");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(std::span<const cplx> v, std::span<const cplx> w) {
  CMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void CMatrix::set_column(std::size_t c, std::span<const cplx> v) {
  if (v.size() != rows_) throw ShapeMismatch("CMatrix::set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const { return std::sqrt(kernels::norm_sq(data_)); }

double CMatrix::hermiticity_error() const {
  if (!square()) return INFINITY;
  double err = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return err;
}

CMatrix CMatrix::hermitian_part() const {
  if (!square()) throw ShapeMismatch("hermitian_part: matrix not square");
  CMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    }
  }
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("CMatrix +: shape mismatch");
  kernels::axpy(1.0, o.data_, data_);
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("CMatrix -: shape mismatch");
  kernels::axpy(-1.0, o.data_, data_);
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("CMatrix *: inner dimensions differ");
  CMatrix c(a.rows(), b.cols());
  kernels::active().gemm(a.rows(), b.cols(), a.cols(), kernels::detail::raw(a.data().data()),
                         kernels::detail::raw(b.data().data()),
                         kernels::detail::raw(c.data().data()));
  return c;
}

CVector matvec(const CMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw ShapeMismatch("matvec: dimension mismatch");
  CVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) y[r] = kernels::dotu(a.row(r), x);
  return y;
}

CMatrix adjoint_times(const CMatrix& a, const CMatrix& b) { return a.adjoint() * b; }

cplx trace_of_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ShapeMismatch("trace_of_product: shapes incompatible");
  }
  // tr(AB) = sum_r A[r,:] . B[:,r]  = sum_r dotu(A row r, B^T row r)
  const CMatrix bt = b.transpose();
  cplx t = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) t += kernels::dotu(a.row(r), bt.row(r));
  return t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      if (s == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          m(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
      }
    }
  }
  return m;
}

CVector kron(std::span<const cplx> a, std::span<const cplx> b) {
  CVector v(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = a[i] * b[j];
  }
  return v;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ShapeMismatch("inner: length mismatch");
  return kernels::dotc(a, b);
}

double norm(std::span<const cplx> v) { return std::sqrt(kernels::norm_sq(v)); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("max_abs_diff: shape mismatch");
  }
  return max_abs_diff(a.data(), b.data());
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ShapeMismatch("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qvl

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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qvl {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix. Products go through the dispatched kernels.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const double> diag);
  /// |v><w|
  static CMatrix outer(std::span<const cplx> v, std::span<const cplx> w);
  static CMatrix projector(std::span<const cplx> v) { return outer(v, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  CVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cplx> v);

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// max_ij |a_ij - a_ji*|
  double hermiticity_error() const;
  /// (A + A^dagger) / 2
  CMatrix hermitian_part() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// A x
CVector matvec(const CMatrix& a, std::span<const cplx> x);
/// A^dagger B without materializing A^dagger's transpose twice.
CMatrix adjoint_times(const CMatrix& a, const CMatrix& b);
/// tr(A B)
cplx trace_of_product(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(std::span<const cplx> a, std::span<const cplx> b);
/// <a|b>
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> v);
/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace qvl

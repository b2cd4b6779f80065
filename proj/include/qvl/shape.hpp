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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qvl {

/// Default upper bound on the total dimension of any dense object.
inline constexpr std::size_t kDefaultDenseCap = std::size_t{1} << 14;

/// Current dimension cap: QMA_VERIFLAB_DENSE_CAP if set, else kDefaultDenseCap.
std::size_t dense_cap();

/// Throws DimensionCapExceeded when total > dense_cap().
void check_dense_cap(std::size_t total, const char* what);

/// Ordered list of local dimensions of a tensor-product space.
class SubsystemShape {
 public:
  SubsystemShape() = default;
  explicit SubsystemShape(std::vector<std::size_t> dims);

  static SubsystemShape uniform(std::size_t local_dim, std::size_t count);
  static SubsystemShape qubits(std::size_t count) { return uniform(2, count); }

  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t count() const { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  std::size_t total() const { return total_; }
  bool empty() const { return dims_.empty(); }

  SubsystemShape concat(const SubsystemShape& other) const;
  /// Subsystem i of this shape lands at position perm[i].
  SubsystemShape permuted(std::span<const std::size_t> perm) const;
  SubsystemShape subset(std::span<const std::size_t> indices) const;
  /// Row-major strides: stride(i) = product of dims after i.
  std::vector<std::size_t> strides() const;

  std::string to_string() const;

  friend bool operator==(const SubsystemShape&, const SubsystemShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// Throws InvalidArgument unless perm is a permutation of 0..n-1.
void validate_permutation(std::span<const std::size_t> perm, std::size_t n);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

}  // namespace qvl

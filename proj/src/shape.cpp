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

#include "qvl/shape.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "qvl/errors.hpp"

namespace qvl {

std::size_t dense_cap() {
  if (const char* env = std::getenv("QMA_VERIFLAB_DENSE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<std::size_t>(v);
  }
  return kDefaultDenseCap;
}

void check_dense_cap(std::size_t total, const char* what) {
  const std::size_t cap = dense_cap();
  if (total > cap) {
    throw DimensionCapExceeded(std::string(what) + ": dimension " + std::to_string(total) +
                               " exceeds dense cap " + std::to_string(cap));
  }
}

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvariantViolation("SubsystemShape: at least one subsystem required");
  total_ = 1;
  for (std::size_t d : dims_) {
    if (d < 2) throw InvariantViolation("SubsystemShape: every local dimension must be >= 2");
    if (total_ > std::numeric_limits<std::size_t>::max() / d) {
      throw DimensionCapExceeded("SubsystemShape: total dimension overflows");
    }
    total_ *= d;
  }
  check_dense_cap(total_, "SubsystemShape");
}

SubsystemShape SubsystemShape::uniform(std::size_t local_dim, std::size_t count) {
  return SubsystemShape(std::vector<std::size_t>(count, local_dim));
}

SubsystemShape SubsystemShape::concat(const SubsystemShape& other) const {
  std::vector<std::size_t> d(dims_);
  d.insert(d.end(), other.dims_.begin(), other.dims_.end());
  return SubsystemShape(std::move(d));
}

SubsystemShape SubsystemShape::permuted(std::span<const std::size_t> perm) const {
  validate_permutation(perm, dims_.size());
  std::vector<std::size_t> d(dims_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d[perm[i]] = dims_[i];
  return SubsystemShape(std::move(d));
}

SubsystemShape SubsystemShape::subset(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> d;
  d.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= dims_.size()) throw InvalidArgument("SubsystemShape::subset: index out of range");
    d.push_back(dims_[i]);
  }
  return SubsystemShape(std::move(d));
}

std::vector<std::size_t> SubsystemShape::strides() const {
  std::vector<std::size_t> s(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) s[i - 1] = s[i] * dims_[i];
  return s;
}

std::string SubsystemShape::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ']';
  return os.str();
}

void validate_permutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("invalid permutation");
    seen[p] = true;
  }
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

}  // namespace qvl

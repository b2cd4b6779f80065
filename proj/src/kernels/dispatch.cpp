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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qvl/kernels/kernels.hpp"

namespace qvl::kernels {

#if defined(QVL_HAVE_AVX2)
const KernelTable& avx2_table();  // kernels/avx2.cpp
#endif

const KernelTable* avx2_kernels() {
#if defined(QVL_HAVE_AVX2)
  return &avx2_table();
#else
  return nullptr;
#endif
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(QVL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

namespace {

const KernelTable* pick_default() {
  if (const char* env = std::getenv("QMA_VERIFLAB_ISA")) {
    if (std::string_view(env) == "scalar") return &scalar_kernels();
  }
  if (cpu_supports(Isa::kAvx2)) return avx2_kernels();
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::invalid_argument(std::string("kernel ISA not available: ") + isa_name(isa));
  }
  const KernelTable* table = isa == Isa::kScalar ? &scalar_kernels() : avx2_kernels();
  current().store(table, std::memory_order_release);
}

}  // namespace qvl::kernels

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

namespace qvl::tol {

// Construction-time invariants (norms, Hermiticity, trace).
inline constexpr double kConstruct = 1e-10;
// Algebraic post-conditions (reconstructions, round trips).
inline constexpr double kAlgebra = 1e-9;
// Slack on inequalities between computed quantities.
inline constexpr double kInequality = 1e-8;
// Eigenvalues in [-kClamp, 0) are treated as zero by matrix functions.
inline constexpr double kClamp = 1e-9;
// Unitarity check, Frobenius norm of U^dagger U - I.
inline constexpr double kUnitary = 1e-9;

}  // namespace qvl::tol

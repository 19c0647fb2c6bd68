// Copyright 2026 The qsteer Authors
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

#ifndef QSTEER_QMATH_TOLERANCES_H
#define QSTEER_QMATH_TOLERANCES_H

/// Every numerical threshold used by the library lives here.
namespace qsteer::tol {

/// Max entrywise |M - M^dagger| for a matrix to count as Hermitian.
inline constexpr double kHermitian = 1e-12;
/// Max |tr(rho) - 1| for a density matrix.
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue a density matrix may have.
inline constexpr double kMinEigenvalue = -1e-10;
/// Eigenvalues closer than this are treated as degenerate.
inline constexpr double kDegeneracy = 1e-10;
/// Eigenvalue pairs whose sum is below this are dropped from the SLD sum.
inline constexpr double kSldSupport = 1e-10;
/// Max entrywise deviation of sum K^dagger K from the identity.
inline constexpr double kCompleteness = 1e-10;
/// Max entrywise deviation of U^dagger U from the identity.
inline constexpr double kUnitary = 1e-10;
/// Control outcomes less likely than this are undefined branches.
inline constexpr double kBranchProbability = 1e-14;
/// Outcome probability below which a nonzero slope makes the classical FI diverge.
inline constexpr double kDivergentProbability = 1e-12;
inline constexpr double kDivergentSlope = 1e-8;
/// Trace of a perturbation (e.g. d rho / d theta) must vanish to this level.
inline constexpr double kTraceless = 1e-10;

}  // namespace qsteer::tol

#endif

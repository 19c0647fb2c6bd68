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

#ifndef QSTEER_QMATH_MATRIX_H
#define QSTEER_QMATH_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

/// Dense complex linear algebra for small multi-qubit registers.
///
/// Tensor factors are ordered with the first factor most significant, so the
/// joint index of (i0, i1, ..., ik) over factor dims (d0, d1, ..., dk) is
/// i0*d1*...*dk + ... + ik. The register convention used throughout the
/// library is C (x) B (x) E1 (x) E2, and a two-qubit environment |a b> has
/// index 2a + b.
namespace qsteer {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

inline constexpr cplx kI{0.0, 1.0};

ComplexMatrix identity(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix dagger(const ComplexMatrix &m);

bool is_power_of_two(std::size_t n);
double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool is_hermitian(const ComplexMatrix &m, double tol);
bool is_unitary(const ComplexMatrix &m, double tol);

/// A trace-one positive-semidefinite matrix whose dimension is a power of two.
/// Construction validates every invariant; instances are immutable.
class DensityMatrix {
   public:
    /// Throws std::invalid_argument unless `m` is Hermitian, unit-trace and PSD
    /// to the library tolerances. The stored matrix is the Hermitian part of `m`.
    static DensityMatrix from_matrix(const ComplexMatrix &m);
    /// Projector onto `psi`, which must be normalized.
    static DensityMatrix pure(const ComplexVector &psi);
    static DensityMatrix basis_state(std::size_t dim, std::size_t index);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    double purity() const;
    /// Expectation tr(rho O), real part.
    double expectation(const ComplexMatrix &observable) const;

   private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    }
    ComplexMatrix m_;
};

/// A Hermitian matrix of any dimension.
class HermitianObservable {
   public:
    static HermitianObservable from_matrix(const ComplexMatrix &m);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }

   private:
    explicit HermitianObservable(ComplexMatrix m) : m_(std::move(m)) {
    }
    ComplexMatrix m_;
};

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Partial trace of an arbitrary square operator over the factors not in
/// `keep`. Kept factors stay in ascending order. Throws std::invalid_argument
/// on dimension mismatch, an empty keep set, or out-of-range indices.
ComplexMatrix partial_trace(
    const ComplexMatrix &m, std::span<const std::size_t> factor_dims, std::span<const std::size_t> keep);
DensityMatrix partial_trace(
    const DensityMatrix &rho, std::span<const std::size_t> factor_dims, std::span<const std::size_t> keep);

struct EigenDecomposition {
    /// Descending.
    std::vector<double> values;
    /// Column k is the eigenvector of values[k].
    ComplexMatrix vectors;
};

/// Spectral decomposition of a Hermitian matrix. Throws std::invalid_argument
/// when the input is not Hermitian to tol::kHermitian.
EigenDecomposition eig_hermitian(const ComplexMatrix &m);
EigenDecomposition eig_hermitian(const HermitianObservable &m);

/// Half the trace norm of a - b.
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace qsteer

#endif

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

#include "qsteer/qmath/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "qsteer/qmath/tolerances.h"

namespace qsteer {

ComplexMatrix identity(std::size_t dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, -kI, kI, 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix dagger(const ComplexMatrix &m) {
    return m.adjoint();
}

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

double max_abs(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return max_abs(a - b);
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || !is_power_of_two(static_cast<std::size_t>(m.rows()))) {
        throw std::invalid_argument("density matrix must be square with power-of-two dimension");
    }
    if (!is_hermitian(m, tol::kHermitian)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    double tr = h.trace().real();
    if (std::abs(tr - 1.0) > tol::kTrace) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(tr));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    double smallest = solver.eigenvalues().minCoeff();
    if (smallest < tol::kMinEigenvalue) {
        throw std::invalid_argument("density matrix has eigenvalue " + std::to_string(smallest));
    }
    return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) {
    if (std::abs(psi.norm() - 1.0) > tol::kTrace) {
        throw std::invalid_argument("pure state vector is not normalized");
    }
    return from_matrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return from_matrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return from_matrix(identity(dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

double DensityMatrix::expectation(const ComplexMatrix &observable) const {
    if (observable.rows() != m_.rows() || observable.cols() != m_.cols()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    return (m_ * observable).trace().real();
}

HermitianObservable HermitianObservable::from_matrix(const ComplexMatrix &m) {
    if (!is_hermitian(m, tol::kHermitian)) {
        throw std::invalid_argument("observable is not Hermitian");
    }
    return HermitianObservable(0.5 * (m + m.adjoint()));
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(
    const ComplexMatrix &m, std::span<const std::size_t> factor_dims, std::span<const std::size_t> keep) {
    std::size_t total = 1;
    for (std::size_t d : factor_dims) {
        if (d == 0) {
            throw std::invalid_argument("partial_trace: zero factor dimension");
        }
        total *= d;
    }
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != total) {
        throw std::invalid_argument("partial_trace: factor dims do not match operator dimension");
    }
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::vector<bool> kept(factor_dims.size(), false);
    for (std::size_t k : keep) {
        if (k >= factor_dims.size() || kept[k]) {
            throw std::invalid_argument("partial_trace: invalid keep index");
        }
        kept[k] = true;
    }

    // Strides of each factor in the full index.
    std::vector<std::size_t> stride(factor_dims.size());
    std::size_t s = 1;
    for (std::size_t f = factor_dims.size(); f-- > 0;) {
        stride[f] = s;
        s *= factor_dims[f];
    }
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t f = 0; f < factor_dims.size(); ++f) {
        (kept[f] ? kept_dim : traced_dim) *= factor_dims[f];
    }

    // offset_kept[r] + offset_traced[t] is the full index of (r, t).
    auto offsets = [&](bool want_kept, std::size_t count) {
        std::vector<std::size_t> out(count);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rem = idx;
            std::size_t full = 0;
            for (std::size_t f = factor_dims.size(); f-- > 0;) {
                if (kept[f] != want_kept) {
                    continue;
                }
                full += (rem % factor_dims[f]) * stride[f];
                rem /= factor_dims[f];
            }
            out[idx] = full;
        }
        return out;
    };
    auto offset_kept = offsets(true, kept_dim);
    auto offset_traced = offsets(false, traced_dim);

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (std::size_t r = 0; r < kept_dim; ++r) {
        for (std::size_t c = 0; c < kept_dim; ++c) {
            cplx acc = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                acc += m(offset_kept[r] + offset_traced[t], offset_kept[c] + offset_traced[t]);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(
    const DensityMatrix &rho, std::span<const std::size_t> factor_dims, std::span<const std::size_t> keep) {
    return DensityMatrix::from_matrix(partial_trace(rho.matrix(), factor_dims, keep));
}

EigenDecomposition eig_hermitian(const ComplexMatrix &m) {
    if (!is_hermitian(m, tol::kHermitian)) {
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    }
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver did not converge");
    }
    const auto n = h.rows();
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = solver.eigenvalues()(n - 1 - k);
        out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

EigenDecomposition eig_hermitian(const HermitianObservable &m) {
    return eig_hermitian(m.matrix());
}

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    auto eig = eig_hermitian(ComplexMatrix(a - b));
    double acc = 0.0;
    for (double v : eig.values) {
        acc += std::abs(v);
    }
    return 0.5 * acc;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    return trace_distance(a.matrix(), b.matrix());
}

}  // namespace qsteer

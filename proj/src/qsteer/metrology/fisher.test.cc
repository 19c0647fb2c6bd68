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

#include "qsteer/metrology/fisher.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "qsteer/test_util.test.h"

using namespace qsteer;
using namespace qsteer::testing;

namespace {

DensityMatrix plus_state() {
    return DensityMatrix::from_matrix(0.5 * (identity(2) + pauli_x()));
}

// Bloch-vector QFI of a qubit: |dr|^2 + (r.dr)^2 / (1 - |r|^2), or |dr|^2 for
// pure states.
double bloch_qfi(const Eigen::Vector3d &r, const Eigen::Vector3d &dr) {
    double rr = r.squaredNorm();
    if (rr > 1.0 - 1e-12) {
        return dr.squaredNorm();
    }
    return dr.squaredNorm() + std::pow(r.dot(dr), 2) / (1.0 - rr);
}

ComplexMatrix from_bloch_derivative(const Eigen::Vector3d &dr) {
    return 0.5 * (dr(0) * pauli_x() + dr(1) * pauli_y() + dr(2) * pauli_z());
}

}  // namespace

TEST(fisher, sld_examples) {
    auto l = sld(DensityMatrix::maximally_mixed(2), pauli_y() / 2.0);
    EXPECT_LE(max_abs_diff(l.matrix(), pauli_y()), 1e-15);
    auto zero = sld(plus_state(), ComplexMatrix::Zero(2, 2));
    EXPECT_LE(max_abs(zero.matrix()), 0.0);
    PhaseConvention conv;
    auto s = unitary_orbit(plus_state(), conv).at(0.0);
    ComplexMatrix lp = sld(s.rho, s.drho).matrix();
    EXPECT_NEAR((lp * lp * s.rho.matrix()).trace().real(), 1.0, 1e-14);
}

TEST(fisher, sld_rejects_bad_derivative) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(sld(plus_state(), m), std::invalid_argument);
    EXPECT_THROW(sld(plus_state(), identity(2)), std::invalid_argument);
}

TEST(fisher, sld_solves_lyapunov_equation_for_full_rank) {
    auto &rng = test_rng();
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto rho = random_density(dim, rng);
            ComplexMatrix d = random_hermitian(dim, rng);
            d -= d.trace() / static_cast<double>(dim) * identity(dim);
            ComplexMatrix l = sld(rho, d).matrix();
            ComplexMatrix anti = 0.5 * (l * rho.matrix() + rho.matrix() * l);
            EXPECT_LE(max_abs_diff(anti, d), 1e-8);
        }
    }
}

TEST(fisher, qfi_examples) {
    PhaseConvention conv;
    EXPECT_NEAR(qfi(unitary_orbit(plus_state(), conv), 0.0), 1.0, 1e-14);
    EXPECT_NEAR(qfi(unitary_orbit(qubit_from_bloch(1.0 / 3.0, 0.0, 0.0), conv), 0.0), 1.0 / 9.0, 1e-14);
    EXPECT_NEAR(qfi(unitary_orbit(DensityMatrix::maximally_mixed(2), conv), 0.0), 0.0, 1e-15);
}

TEST(fisher, qfi_scales_with_eta_and_equatorial_length) {
    for (double eta : {0.5, 1.0}) {
        PhaseConvention conv(eta);
        for (double r : {0.0, 0.2, 0.5, 0.9, 1.0}) {
            for (double phi : {0.0, 1.0}) {
                auto fam = unitary_orbit(qubit_from_bloch(r * std::cos(phi), r * std::sin(phi), 0.0), conv);
                EXPECT_NEAR(qfi(fam, 0.3), 4.0 * eta * eta * r * r, 1e-12);
            }
        }
    }
}

TEST(fisher, qfi_matches_bloch_formula_for_random_qubits) {
    auto &rng = test_rng();
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Eigen::Vector3d r(n(rng), n(rng), n(rng));
        r *= std::cbrt(unif(rng)) / r.norm() * 0.999;
        Eigen::Vector3d dr(n(rng), n(rng), n(rng));
        auto rho = qubit_from_bloch(r(0), r(1), r(2));
        EXPECT_NEAR(qfi(rho, from_bloch_derivative(dr)), bloch_qfi(r, dr), 1e-8 * (1.0 + bloch_qfi(r, dr)));
    }
}

TEST(fisher, variance_examples) {
    PhaseConvention conv;
    auto h = conv.hamiltonian();
    EXPECT_NEAR(variance(DensityMatrix::basis_state(2, 0), h), 0.0, 1e-15);
    EXPECT_NEAR(variance(plus_state(), h), 0.25, 1e-15);
    for (double v : {0.0, 0.3, 0.8}) {
        double r = 1.0 - v;
        EXPECT_NEAR(variance(qubit_from_bloch(0.0, 0.0, r), h), (1.0 - r * r) / 4.0, 1e-15);
    }
    EXPECT_THROW(variance(DensityMatrix::maximally_mixed(4), h), std::invalid_argument);
}

TEST(fisher, classical_fi_examples) {
    PhaseConvention conv;
    auto fam = unitary_orbit(plus_state(), conv);
    auto y = HermitianObservable::from_matrix(pauli_y());
    auto z = HermitianObservable::from_matrix(pauli_z());
    EXPECT_NEAR(classical_fi(measurement_curve(fam, y), 0.0), 1.0, 1e-14);
    EXPECT_NEAR(classical_fi(measurement_curve(fam, z), 0.0), 0.0, 1e-15);
    ProbabilityCurve flat = [](double) { return OutcomeDistribution{{0.3, 0.7}, {0.0, 0.0}}; };
    EXPECT_DOUBLE_EQ(classical_fi(flat, 1.0), 0.0);
}

TEST(fisher, classical_fi_analytic_curve) {
    // p(b) = (1 +- sin theta)/2 on |+> with sigma_y readout at eta = 1/2.
    PhaseConvention conv;
    auto fam = unitary_orbit(plus_state(), conv);
    auto y = HermitianObservable::from_matrix(pauli_y());
    for (double theta : {-1.0, -0.3, 0.0, 0.5, 1.2}) {
        auto d = measurement_curve(fam, y)(theta);
        EXPECT_NEAR(d.p[0], 0.5 * (1.0 + std::sin(theta)), 1e-14);
        EXPECT_NEAR(d.dp[0], 0.5 * std::cos(theta), 1e-14);
    }
}

TEST(fisher, classical_fi_divergence_detected) {
    OutcomeDistribution d{{0.0, 1.0}, {0.1, -0.1}};
    EXPECT_THROW(classical_fi(d), DivergentFisherInformation);
    OutcomeDistribution ok{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_DOUBLE_EQ(classical_fi(ok), 0.0);
}

TEST(fisher, classical_fi_bounded_by_qfi) {
    auto &rng = test_rng();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        PhaseConvention conv(trial % 2 ? 1.0 : 0.5);
        auto rho = random_density(2, rng, 1 + trial % 2);
        auto noise = trial % 3 ? dephased_shift(unif(rng), 0.0, conv) : depolarized_shift(unif(rng), 0.0, conv);
        auto s = channel_orbit(noise, rho, conv).at(2.0 * unif(rng) - 1.0);
        ComplexMatrix m = random_hermitian(2, rng);
        double f_q = qfi(s);
        double f_c = classical_fi(measurement_distribution(s, HermitianObservable::from_matrix(m)));
        EXPECT_LE(f_c, f_q + 1e-8);
    }
}

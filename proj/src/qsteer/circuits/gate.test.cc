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

#include "qsteer/circuits/gate.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace qsteer;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST(gate, hadamard_matrix) {
    ComplexMatrix h = gate_matrix(GateKind::H);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(h(0, 0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(0, 1) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(1, 0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(1, 1) + r), 0.0, 1e-15);
}

TEST(gate, rz_pi_is_diag_minus_i_i) {
    ComplexMatrix rz = gate_matrix(GateKind::Rz, kPi);
    EXPECT_NEAR(std::abs(rz(0, 0) + kI), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rz(1, 1) - kI), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rz(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rz(1, 0)), 0.0, 1e-15);
}

TEST(gate, controlled_ry_acts_only_when_control_set) {
    const double phi = 0.731;
    ComplexMatrix cry = gate_matrix(GateKind::CRy, phi);
    // |10> -> cos(phi/2)|10> + sin(phi/2)|11>
    EXPECT_NEAR(std::abs(cry(2, 2) - std::cos(phi / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cry(3, 2) - std::sin(phi / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cry(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cry(1, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(cry(2, 0)), 0.0, 1e-15);
}

TEST(gate, paulis_and_phases) {
    EXPECT_LT(max_abs_diff(gate_matrix(GateKind::X), pauli_x()), 1e-15);
    EXPECT_LT(max_abs_diff(gate_matrix(GateKind::Y), pauli_y()), 1e-15);
    EXPECT_LT(max_abs_diff(gate_matrix(GateKind::Z), pauli_z()), 1e-15);
    ComplexMatrix s = gate_matrix(GateKind::S);
    EXPECT_LT(max_abs_diff(s * s, pauli_z()), 1e-15);
    EXPECT_LT(max_abs_diff(s * gate_matrix(GateKind::Sdg), identity(2)), 1e-15);
}

TEST(gate, ry_rotates_zero_to_bloch_angle) {
    const double t = 1.234;
    ComplexMatrix ry = gate_matrix(GateKind::Ry, t);
    EXPECT_NEAR(ry(0, 0).real(), std::cos(t / 2), 1e-15);
    EXPECT_NEAR(ry(1, 0).real(), std::sin(t / 2), 1e-15);
}

TEST(gate, cnot_and_toffolis_permute_basis) {
    ComplexMatrix cnot = gate_matrix(GateKind::CNOT);
    EXPECT_EQ(cnot(3, 2), cplx(1.0));
    EXPECT_EQ(cnot(2, 3), cplx(1.0));
    ComplexMatrix t = gate_matrix(GateKind::Toffoli);
    ASSERT_EQ(t.rows(), 8);
    EXPECT_EQ(t(7, 6), cplx(1.0));
    EXPECT_EQ(t(5, 5), cplx(1.0));
    ComplexMatrix ct = gate_matrix(GateKind::CToffoli);
    ASSERT_EQ(ct.rows(), 16);
    EXPECT_EQ(ct(15, 14), cplx(1.0));
    EXPECT_EQ(ct(13, 13), cplx(1.0));
}

TEST(gate, every_matrix_is_unitary_with_matching_arity) {
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::Rz,
                       GateKind::Ry, GateKind::CNOT, GateKind::CRy, GateKind::Toffoli, GateKind::CToffoli}) {
        ComplexMatrix m = gate_matrix(k, 0.37);
        EXPECT_TRUE(is_unitary(m, 1e-12)) << gate_name(k);
        EXPECT_EQ(static_cast<std::size_t>(m.rows()), std::size_t{1} << gate_arity(k)) << gate_name(k);
        EXPECT_EQ(parse_gate_kind(gate_name(k)), k);
    }
}

TEST(gate, names_parse_case_insensitively) {
    EXPECT_EQ(parse_gate_kind("cnot"), GateKind::CNOT);
    EXPECT_EQ(parse_gate_kind("Sdg"), GateKind::Sdg);
    EXPECT_EQ(parse_gate_kind("rz"), GateKind::Rz);
    EXPECT_THROW(parse_gate_kind("SWAP"), std::invalid_argument);
}

TEST(gate, arity_mismatch_rejected) {
    EXPECT_THROW(gate_matrix(Gate{GateKind::CNOT, {0}, 0.0}), std::invalid_argument);
    EXPECT_THROW(gate_matrix(Gate{GateKind::H, {0, 1}, 0.0}), std::invalid_argument);
}

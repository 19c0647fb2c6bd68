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

#include "qsteer/circuits/simulator.h"

#include <cmath>
#include <algorithm>
#include <random>

#include "gtest/gtest.h"

#include "qsteer/circuits/circuit.h"
#include "qsteer/test_util.test.h"

using namespace qsteer;
using namespace qsteer::testing;

namespace {

// Full-register operator for a gate by explicit Kronecker products and a
// permutation of basis states.
ComplexMatrix embed(const ComplexMatrix &u, const std::vector<std::size_t> &qubits, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t k = qubits.size();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t j = 0;
        for (std::size_t t = 0; t < k; ++t) {
            j = (j << 1) | ((col >> (n - 1 - qubits[t])) & 1U);
        }
        for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
            std::size_t row = col;
            for (std::size_t t = 0; t < k; ++t) {
                const std::size_t bit = std::size_t{1} << (n - 1 - qubits[t]);
                row = ((i >> (k - 1 - t)) & 1U) ? (row | bit) : (row & ~bit);
            }
            out(row, col) += u(i, j);
        }
    }
    return out;
}

}  // namespace

TEST(simulator, empty_circuit_reads_all_zeros) {
    Circuit c({"a", "b", "c"});
    c.set_measured({0, 1, 2});
    auto rec = simulate(c);
    EXPECT_EQ(rec.probability(0), 1.0);
    for (std::size_t i = 1; i < 8; ++i) {
        EXPECT_EQ(rec.probability(i), 0.0);
    }
}

TEST(simulator, bell_pair) {
    Circuit c({"a", "b"});
    c.append(GateKind::H, {0});
    c.append(GateKind::CNOT, {0, 1});
    c.set_measured({0, 1});
    auto rec = simulate(c);
    EXPECT_NEAR(rec.probability(0), 0.5, 1e-15);
    EXPECT_NEAR(rec.probability(3), 0.5, 1e-15);
    EXPECT_NEAR(rec.marginal(1, 1), 0.5, 1e-15);
}

TEST(simulator, local_application_matches_explicit_embedding) {
    auto &rng = test_rng();
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4;
        ComplexMatrix rho = random_density(16, rng).matrix();
        std::vector<std::size_t> qs;
        std::vector<std::size_t> pool = {0, 1, 2, 3};
        std::shuffle(pool.begin(), pool.end(), rng);
        qs.assign(pool.begin(), pool.begin() + 1 + trial % 3);
        ComplexMatrix u = random_unitary(std::size_t{1} << qs.size(), rng);
        ComplexMatrix full = embed(u, qs, n);
        EXPECT_LT(max_abs_diff(apply_unitary(rho, u, qs, n), full * rho * full.adjoint()), 1e-12);
    }
}

TEST(simulator, measurement_order_follows_measured_list) {
    Circuit c({"a", "b"});
    c.append(GateKind::X, {1});
    c.set_measured({1, 0});
    EXPECT_NEAR(simulate(c).probability(2), 1.0, 1e-15);
    c.set_measured({0, 1});
    EXPECT_NEAR(simulate(c).probability(1), 1.0, 1e-15);
}

TEST(simulator, ensemble_mixes_members) {
    Circuit a({"q"});
    a.set_measured({0});
    Circuit b = a;
    b.append(GateKind::X, {0});
    CircuitEnsemble e{{{0.3, a}, {0.7, b}}};
    auto rec = simulate(e);
    EXPECT_NEAR(rec.probability(0), 0.3, 1e-15);
    EXPECT_NEAR(final_state(e)(1, 1).real(), 0.7, 1e-15);
    EXPECT_THROW(final_state(CircuitEnsemble{}), std::invalid_argument);
}

TEST(simulator, records_validate) {
    EXPECT_THROW(MeasurementRecord::create({0}, {1.0}), std::invalid_argument);
    EXPECT_THROW(MeasurementRecord::create({0}, {0.7, 0.2}), std::invalid_argument);
    EXPECT_THROW(MeasurementRecord::create({0}, {1.1, -0.1}), std::invalid_argument);
    auto r = MeasurementRecord::create({0}, {1.0 + 1e-15, -1e-15});
    EXPECT_EQ(r.probability(1), 0.0);
    EXPECT_THROW(r.marginal(1, 0), std::invalid_argument);
}

TEST(circuit, append_validates_gates_and_annotations) {
    EXPECT_THROW(Circuit({}), std::invalid_argument);
    EXPECT_THROW(Circuit({"a", "a"}), std::invalid_argument);
    Circuit c({"a", "b"});
    EXPECT_THROW(c.append(GateKind::CNOT, {0}), std::invalid_argument);
    EXPECT_THROW(c.append(GateKind::CNOT, {0, 0}), std::invalid_argument);
    EXPECT_THROW(c.append(GateKind::H, {2}), std::invalid_argument);
    EXPECT_THROW(c.append(GateKind::H, {0}, 0.0, GateAnnotation{-1.0, std::nullopt, std::nullopt}),
                 std::invalid_argument);
    EXPECT_THROW(c.append(GateKind::H, {0}, 0.0, GateAnnotation{std::nullopt, 1.5, std::nullopt}),
                 std::invalid_argument);
    EXPECT_THROW(c.set_measured({0, 0}), std::invalid_argument);
    EXPECT_THROW(c.qubit("z"), std::invalid_argument);
    EXPECT_EQ(c.qubit("b"), 1u);
}

TEST(circuit, counts) {
    Circuit c({"a", "b", "c", "d"});
    c.append(GateKind::H, {0});
    c.append(GateKind::CNOT, {0, 1});
    c.append(GateKind::CToffoli, {0, 1, 2, 3}, 0.0, GateAnnotation{std::nullopt, std::nullopt, 52});
    c.append(GateKind::Rz, {3}, 0.2);
    EXPECT_EQ(c.expanded_cnot_count(), 53u);
    EXPECT_EQ(c.single_qubit_gate_count(), 2u);
}

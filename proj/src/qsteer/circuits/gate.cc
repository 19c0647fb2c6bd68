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

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsteer {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 12> kNames{{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "SDG"},
    {GateKind::Rz, "RZ"},
    {GateKind::Ry, "RY"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CRy, "CRY"},
    {GateKind::Toffoli, "TOFFOLI"},
    {GateKind::CToffoli, "CTOFFOLI"},
}};

// Block-diagonal controlled version of `u` with `n_controls` leading controls.
ComplexMatrix controlled(const ComplexMatrix &u, std::size_t n_controls) {
    const auto d = u.rows();
    const auto total = d << n_controls;
    ComplexMatrix out = ComplexMatrix::Identity(total, total);
    out.bottomRightCorner(d, d) = u;
    return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind parse_gate_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (const auto &[k, n] : kNames) {
        if (n == upper) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate name: " + std::string(name));
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CRy:
            return 2;
        case GateKind::Toffoli:
            return 3;
        case GateKind::CToffoli:
            return 4;
        default:
            return 1;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::Rz || kind == GateKind::Ry || kind == GateKind::CRy;
}

bool is_single_qubit(GateKind kind) {
    return gate_arity(kind) == 1;
}

ComplexMatrix gate_matrix(GateKind kind, double angle) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    switch (kind) {
        case GateKind::X:
            return pauli_x();
        case GateKind::Y:
            return pauli_y();
        case GateKind::Z:
            return pauli_z();
        case GateKind::H:
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m << 1.0, 0.0, 0.0, kI;
            return m;
        case GateKind::Sdg:
            m << 1.0, 0.0, 0.0, -kI;
            return m;
        case GateKind::Rz:
            m << std::exp(-kI * angle / 2.0), 0.0, 0.0, std::exp(kI * angle / 2.0);
            return m;
        case GateKind::Ry:
            m << std::cos(angle / 2.0), -std::sin(angle / 2.0), std::sin(angle / 2.0), std::cos(angle / 2.0);
            return m;
        case GateKind::CNOT:
            return controlled(pauli_x(), 1);
        case GateKind::CRy:
            return controlled(gate_matrix(GateKind::Ry, angle), 1);
        case GateKind::Toffoli:
            return controlled(pauli_x(), 2);
        case GateKind::CToffoli:
            return controlled(pauli_x(), 3);
    }
    throw std::invalid_argument("unknown gate kind");
}

ComplexMatrix gate_matrix(const Gate &g) {
    if (g.qubits.size() != gate_arity(g.kind)) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) + " expects " +
                                    std::to_string(gate_arity(g.kind)) + " qubits");
    }
    return gate_matrix(g.kind, g.angle);
}

}  // namespace qsteer

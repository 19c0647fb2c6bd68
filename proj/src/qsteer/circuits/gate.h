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

#ifndef QSTEER_CIRCUITS_GATE_H
#define QSTEER_CIRCUITS_GATE_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsteer/qmath/matrix.h"

namespace qsteer {

enum class GateKind { X, Y, Z, H, S, Sdg, Rz, Ry, CNOT, CRy, Toffoli, CToffoli };

/// Canonical upper-case name, e.g. "CNOT", "RZ", "SDG".
std::string_view gate_name(GateKind kind);
/// Case-insensitive. Throws std::invalid_argument on an unknown name.
GateKind parse_gate_kind(std::string_view name);

/// Number of qubits the gate touches (controls plus target).
std::size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
bool is_single_qubit(GateKind kind);

/// A gate on concrete register indices. For controlled kinds the controls come
/// first in `qubits` and the target last.
struct Gate {
    GateKind kind;
    std::vector<std::size_t> qubits;
    double angle = 0.0;

    std::size_t target() const {
        return qubits.back();
    }
};

/// Matrix over the gate's own qubits, the first listed qubit most
/// significant. Rz(t) = diag(exp(-it/2), exp(it/2)), Ry(t) = exp(-i t Y / 2).
ComplexMatrix gate_matrix(GateKind kind, double angle = 0.0);
ComplexMatrix gate_matrix(const Gate &g);

}  // namespace qsteer

#endif

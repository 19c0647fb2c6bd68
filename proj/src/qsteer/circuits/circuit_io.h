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

#ifndef QSTEER_CIRCUITS_CIRCUIT_IO_H
#define QSTEER_CIRCUITS_CIRCUIT_IO_H

#include <string>
#include <string_view>

#include "qsteer/circuits/circuit.h"

namespace qsteer {

/// Plain-text circuit format, one statement per line:
///
///     # comment
///     roles C B E1 E2
///     measure C B
///     H 0
///     RZ 1 0.785398
///     CNOT 0,1
///     CTOFFOLI 0,2,3,1 duration=16400 cnots=52
///
/// `roles` must come first. Qubits are indices or role names, comma
/// separated, controls first. Angle-bearing gates (RZ, RY, CRY) take one
/// angle in radians. Trailing key=value tokens set the annotations
/// `duration` (ns), `error` and `cnots`.
std::string write_circuit(const Circuit &c);
/// Throws std::invalid_argument with the offending line number.
Circuit parse_circuit(std::string_view text);

}  // namespace qsteer

#endif

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

#ifndef QSTEER_CIRCUITS_CIRCUIT_H
#define QSTEER_CIRCUITS_CIRCUIT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsteer/circuits/gate.h"

namespace qsteer {

/// Optional per-gate bookkeeping that overrides the device defaults.
struct GateAnnotation {
    /// Wall-clock duration in ns.
    std::optional<double> duration_ns;
    /// Depolarizing error rate.
    std::optional<double> error_rate;
    /// Number of CNOTs the gate expands to on hardware. When set on a
    /// multi-qubit gate without an explicit error rate, the gate error is
    /// that of this many CNOTs.
    std::optional<std::size_t> cnot_equivalent;
};

struct Operation {
    Gate gate;
    GateAnnotation annotation;
};

/// Gate sequence over named qubit roles. Qubit 0 is the most significant
/// tensor factor. The register starts in |0...0>.
class Circuit {
   public:
    explicit Circuit(std::vector<std::string> roles);

    const std::vector<std::string> &roles() const {
        return roles_;
    }
    std::size_t num_qubits() const {
        return roles_.size();
    }
    /// Index of `role`; throws std::invalid_argument when absent.
    std::size_t qubit(std::string_view role) const;

    /// Validates arity, index range, distinct qubits and non-negative
    /// annotations. Throws std::invalid_argument.
    void append(Gate g, GateAnnotation annotation = {});
    void append(GateKind kind, std::vector<std::size_t> qubits, double angle = 0.0, GateAnnotation annotation = {});

    const std::vector<Operation> &operations() const {
        return ops_;
    }

    /// Qubits read out at the end, in outcome-bit order (first is most
    /// significant in the MeasurementRecord index).
    const std::vector<std::size_t> &measured() const {
        return measured_;
    }
    void set_measured(std::vector<std::size_t> qubits);

    /// CNOT count after expanding annotated composite gates.
    std::size_t expanded_cnot_count() const;
    std::size_t single_qubit_gate_count() const;

   private:
    std::vector<std::string> roles_;
    std::vector<Operation> ops_;
    std::vector<std::size_t> measured_;
};

}  // namespace qsteer

#endif

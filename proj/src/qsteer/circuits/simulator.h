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

#ifndef QSTEER_CIRCUITS_SIMULATOR_H
#define QSTEER_CIRCUITS_SIMULATOR_H

#include <span>
#include <vector>

#include "qsteer/circuits/circuit.h"
#include "qsteer/qmath/matrix.h"

namespace qsteer {

/// Joint computational-basis outcome probabilities of the measured qubits.
/// Outcome index bits follow `qubits`, first most significant; bit 0 is the
/// +1 eigenvalue of the measured observable.
class MeasurementRecord {
   public:
    /// Validates size 2^k, sum 1 within 1e-12 and entries >= -1e-14. Tiny
    /// negative entries are clamped to zero.
    static MeasurementRecord create(std::vector<std::size_t> qubits, std::vector<double> probabilities);

    const std::vector<std::size_t> &qubits() const {
        return qubits_;
    }
    const std::vector<double> &probabilities() const {
        return probs_;
    }
    double probability(std::size_t outcome) const {
        return probs_.at(outcome);
    }
    /// Probability that measured qubit number `position` reads `bit`.
    double marginal(std::size_t position, int bit) const;

   private:
    MeasurementRecord(std::vector<std::size_t> q, std::vector<double> p) : qubits_(std::move(q)), probs_(std::move(p)) {
    }
    std::vector<std::size_t> qubits_;
    std::vector<double> probs_;
};

/// u * m restricted to `qubits` (first most significant in u) of an n-qubit
/// operator.
ComplexMatrix apply_left(const ComplexMatrix &m, const ComplexMatrix &u, std::span<const std::size_t> qubits,
                         std::size_t n_qubits);
/// u rho u^dagger on `qubits`.
ComplexMatrix apply_unitary(const ComplexMatrix &rho, const ComplexMatrix &u, std::span<const std::size_t> qubits,
                            std::size_t n_qubits);
ComplexMatrix apply_gate(const ComplexMatrix &rho, const Gate &g, std::size_t n_qubits);

/// Noiseless final density matrix from |0...0>.
ComplexMatrix final_state(const Circuit &c);

/// Diagonal readout of `qubits` in the computational basis.
MeasurementRecord measure(const ComplexMatrix &rho, std::size_t n_qubits, const std::vector<std::size_t> &qubits);

/// Noiseless simulation followed by readout of c.measured().
MeasurementRecord simulate(const Circuit &c);

/// Weighted classical mixture of circuit runs (used for incoherent controls).
struct CircuitEnsemble {
    struct Member {
        double weight;
        Circuit circuit;
    };
    std::vector<Member> members;
};

ComplexMatrix final_state(const CircuitEnsemble &e);
MeasurementRecord simulate(const CircuitEnsemble &e);
/// sum_k w_k r_k over records with identical measured qubits.
MeasurementRecord mix(const std::vector<double> &weights, const std::vector<MeasurementRecord> &records);

}  // namespace qsteer

#endif

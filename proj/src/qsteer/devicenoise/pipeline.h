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

#ifndef QSTEER_DEVICENOISE_PIPELINE_H
#define QSTEER_DEVICENOISE_PIPELINE_H

#include <span>
#include <vector>

#include "qsteer/circuits/circuit.h"
#include "qsteer/circuits/simulator.h"
#include "qsteer/devicenoise/device_params.h"
#include "qsteer/devicenoise/lindblad.h"

namespace qsteer {

/// Error rate of one operation. An explicit annotation wins. Otherwise a
/// single-qubit gate takes its qubit's gate error, a CNOT its pair's error,
/// and a gate annotated with n CNOT equivalents 1 - (1 - e)^n where e is the
/// worst CNOT error among pairs of its qubits. Uncalibrated pairs use
/// DeviceParams::worst_pair(). Throws std::invalid_argument when no rule
/// applies.
double gate_error_rate(const Operation &op, const Circuit &c, const DeviceParams &p);

/// Duration of one operation in ns. An explicit annotation wins; X, Y, Z, Ry,
/// Rz take the single-qubit time, H and S/Sdg that time scaled by h_factor
/// and s_factor, a CNOT its pair's time. Other gates must be annotated.
double gate_duration_ns(const Operation &op, const Circuit &c, const DeviceParams &p);

/// 1 - prod(1 - rate).
double accumulate_gate_error(std::span<const double> rates);
double accumulate_gate_error(const Circuit &c, const DeviceParams &p);
double total_gate_time(const Circuit &c, const DeviceParams &p);

/// (1 - gamma) rho + gamma I / 2^n.
ComplexMatrix gate_error_channel(const ComplexMatrix &rho, double gamma, std::size_t n_qubits);
DensityMatrix gate_error_channel(const DensityMatrix &rho, double gamma, std::size_t n_qubits);

/// (1 - gamma) rho + gamma X rho X on one qubit of an n-qubit state.
ComplexMatrix readout_error_channel(const ComplexMatrix &rho, double gamma, std::size_t qubit, std::size_t n_qubits);
DensityMatrix readout_error_channel(const DensityMatrix &rho, double gamma);
/// Flips bit k of every outcome independently with probability gammas[k].
MeasurementRecord readout_error_channel(const MeasurementRecord &r, const std::vector<double> &gammas);

/// Noise applied after the ideal unitary, in this order: relaxation and
/// dephasing over the total gate time, one depolarizing gate-error channel on
/// the whole register, measurement, readout bit flips on the measured qubits.
struct NoisePipeline {
    double duration_ns = 0.0;
    LindbladRates rates;
    double gate_error = 0.0;
    /// One per measured qubit, in measured order.
    std::vector<double> readout_errors;

    static NoisePipeline from_device(const Circuit &c, const DeviceParams &p,
                                     DephasingFormula formula = DephasingFormula::as_printed);
    static NoisePipeline noiseless(const Circuit &c);

    /// Relaxation, dephasing and gate error on the pre-measurement state.
    ComplexMatrix apply_channels(const ComplexMatrix &rho) const;
};

MeasurementRecord simulate(const Circuit &c, const NoisePipeline &noise);

/// simulate(c, NoisePipeline::from_device(c, p, formula)).
MeasurementRecord noisy_pipeline(const Circuit &c, const DeviceParams &p,
                                 DephasingFormula formula = DephasingFormula::as_printed);
/// Each member runs through its own pipeline; records are mixed by weight.
MeasurementRecord noisy_pipeline(const CircuitEnsemble &e, const DeviceParams &p,
                                 DephasingFormula formula = DephasingFormula::as_printed);

}  // namespace qsteer

#endif

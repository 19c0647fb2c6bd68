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

#ifndef QSTEER_DEVICENOISE_LINDBLAD_H
#define QSTEER_DEVICENOISE_LINDBLAD_H

#include <string_view>
#include <vector>

#include "qsteer/devicenoise/device_params.h"
#include "qsteer/qmath/matrix.h"

namespace qsteer {

/// How the dephasing rate is derived from T1 and T2.
///   as_printed: gamma_T2 = 1/T1 - 1/(2 T2)
///   standard:   gamma_T2 = (1/T2 - 1/(2 T1)) / 2, so that transverse
///               coherence decays as exp(-t/T2) overall.
enum class DephasingFormula { as_printed, standard };

DephasingFormula parse_dephasing_formula(std::string_view s);
std::string_view dephasing_formula_name(DephasingFormula f);

/// Per-qubit rates in 1/us.
struct QubitRates {
    double gamma_t1 = 0.0;
    double gamma_t2 = 0.0;
};

/// Relaxation toward |0> with jump operator sigma_- = |0><1| at rate
/// gamma_t1, and sigma_z dephasing with coefficient gamma_t2 (coherences decay
/// as exp(-2 gamma_t2 t)). Qubit k of the register is per_qubit[k].
struct LindbladRates {
    std::vector<QubitRates> per_qubit;
    DephasingFormula formula = DephasingFormula::as_printed;

    /// Rates for each circuit role. Throws std::invalid_argument for an
    /// uncalibrated role or a negative rate.
    static LindbladRates from_device(const DeviceParams &p, const std::vector<std::string> &roles,
                                     DephasingFormula formula = DephasingFormula::as_printed);
    static LindbladRates zero(std::size_t n_qubits);

    std::size_t num_qubits() const {
        return per_qubit.size();
    }
};

/// Single-qubit Liouvillian acting on the row-major vectorization
/// (index 2a + b for rho(a, b)).
ComplexMatrix qubit_liouvillian(const QubitRates &r);

/// exp(L t) for one qubit, t in ns. Memoized per (rates, t); safe for
/// concurrent callers.
ComplexMatrix qubit_propagator(const QubitRates &r, double t_ns);

/// Evolves an n-qubit state for t ns. The generator is a sum of commuting
/// single-qubit terms, so this applies each qubit's exact propagator in turn.
/// Throws std::invalid_argument for t < 0 or a size mismatch.
ComplexMatrix lindblad_evolve(const ComplexMatrix &rho, double t_ns, const LindbladRates &rates);
DensityMatrix lindblad_evolve(const DensityMatrix &rho, double t_ns, const LindbladRates &rates);

/// Full-register Liouvillian (dimension 4^n, row-major vectorization). Meant
/// for cross-checks on small registers.
ComplexMatrix register_liouvillian(const LindbladRates &rates);

/// Reference integrator: fixed-step RK4 on the full master equation with step
/// at most max_step_ns.
ComplexMatrix lindblad_evolve_rk4(const ComplexMatrix &rho, double t_ns, const LindbladRates &rates,
                                  double max_step_ns = 10.0);

}  // namespace qsteer

#endif

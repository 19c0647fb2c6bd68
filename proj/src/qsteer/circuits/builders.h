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

#ifndef QSTEER_CIRCUITS_BUILDERS_H
#define QSTEER_CIRCUITS_BUILDERS_H

#include <array>
#include <string_view>
#include <utility>

#include "qsteer/channels/channels.h"
#include "qsteer/circuits/circuit.h"
#include "qsteer/circuits/simulator.h"

namespace qsteer {

/// Bob's input state, one of the four conditional states of the steering
/// assemblage.
enum class PrepLabel { plus, minus, zero, one };

/// Accepts "+", "plus", "-", "minus", "0", "zero", "1", "one".
PrepLabel parse_prep_label(std::string_view s);
std::string_view prep_label_name(PrepLabel p);
DensityMatrix prep_state(PrepLabel p);
inline constexpr std::array<PrepLabel, 4> kAllPreps{PrepLabel::plus, PrepLabel::minus, PrepLabel::zero,
                                                    PrepLabel::one};

/// Basis change on B before the terminal sigma_z readout. With `none` no
/// basis change is applied to either B or C, which leaves the pre-measurement
/// state available for inspection.
enum class Readout { none, sigma_y, sigma_z };

struct BuildOptions {
    PhaseConvention conv;
    Readout readout = Readout::sigma_y;
    ControlState control = ControlState::plus();
};

/// Duration and CNOT content of one controlled-Toffoli as it runs on hardware.
inline constexpr double kControlledToffoliNs = 16400.0;
inline constexpr std::size_t kControlledToffoliCnots = 52;

/// phi = 2 asin(sqrt(w / 2)).
double dephasing_angle(double w);
/// (zeta, xi) = (2 asin sqrt(v/2), 2 asin sqrt(v / (4 - 2v))).
std::pair<double, double> depolarizing_angles(double v);

/// Two-qubit environment preparation over (a, b), a most significant:
/// Ry_b(zeta), Ry_a((xi + pi/2)/2), CNOT(b->a), Ry_a((xi - pi/2)/2), CNOT(b->a).
ComplexMatrix env_prep_unitary(double zeta, double xi);

/// Four-qubit circuit over (C, B, E1, E2) realizing the coherently controlled
/// pair of dephased phase shifts. The control must be pure; see the ensemble
/// builders for incoherent controls. 12 CNOTs and at most 13 single-qubit
/// gates. Measures (C, B) with C in the sigma_x basis.
Circuit build_dephased_circuit(double w, double theta, PrepLabel prep, const BuildOptions &opts = {});

/// Six-qubit circuit over (C, B, E1, E1b, E2, E2b) for depolarized shifts:
/// C-controlled environment preparation (16 CNOTs) followed by six
/// controlled-Toffolis (52 CNOTs each) applying sigma_x, sigma_y, sigma_z to B
/// on environment levels |01>, |10>, |11>.
Circuit build_depolarized_circuit(double v, double theta, PrepLabel prep, const BuildOptions &opts = {});

/// Pure controls give one member. Incoherent controls give the two control
/// levels with weights alpha and 1 - alpha.
CircuitEnsemble build_dephased_ensemble(double w, double theta, PrepLabel prep, const BuildOptions &opts = {});
CircuitEnsemble build_depolarized_ensemble(double v, double theta, PrepLabel prep, const BuildOptions &opts = {});

}  // namespace qsteer

#endif

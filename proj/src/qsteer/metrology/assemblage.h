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

#ifndef QSTEER_METROLOGY_ASSEMBLAGE_H
#define QSTEER_METROLOGY_ASSEMBLAGE_H

#include <functional>
#include <string>
#include <vector>

#include "qsteer/channels/channels.h"
#include "qsteer/qmath/matrix.h"

namespace qsteer {

struct AssemblageElement {
    double probability;
    /// Conditional state. Elements with zero probability carry the maximally
    /// mixed state as a placeholder and never contribute.
    DensityMatrix state;
};

struct AssemblageSetting {
    std::string name;
    std::vector<AssemblageElement> outcomes;
};

/// Alice's settings with, for each outcome, p(a|A) and Bob's conditional state.
class Assemblage {
   public:
    /// Validates per-setting normalization and equality of the no-signaling
    /// marginals. Throws std::invalid_argument.
    static Assemblage create(std::vector<AssemblageSetting> settings);

    const std::vector<AssemblageSetting> &settings() const {
        return settings_;
    }
    std::size_t dim() const;
    /// sum_a p(a|A) rho_{a|A} for setting `index`.
    ComplexMatrix marginal(std::size_t index) const;

   private:
    explicit Assemblage(std::vector<AssemblageSetting> s) : settings_(std::move(s)) {
    }
    std::vector<AssemblageSetting> settings_;
};

/// Settings sigma_x and sigma_z on half of a singlet-free maximally entangled
/// pair: outcomes |+>, |-> and |0>, |1>, each with probability 1/2.
Assemblage build_table1_assemblage();

/// Explicit local-hidden-state model: hidden states rho_lambda with weights,
/// and response[A][lambda][a] = p(a|A, lambda).
struct LhsModel {
    std::vector<std::string> setting_names;
    std::vector<double> weights;
    std::vector<DensityMatrix> hidden_states;
    std::vector<std::vector<std::vector<double>>> response;

    Assemblage assemblage() const;
};

/// A state and its theta-derivative at one parameter value.
struct LocalState {
    DensityMatrix rho;
    ComplexMatrix drho;
};

/// theta -> (rho(theta), d rho / d theta).
class PhaseFamily {
   public:
    using Fn = std::function<LocalState(double)>;

    PhaseFamily(Fn fn, PhaseConvention conv) : fn_(std::move(fn)), conv_(conv) {
    }
    LocalState at(double theta) const {
        return fn_(theta);
    }
    const PhaseConvention &convention() const {
        return conv_;
    }

   private:
    Fn fn_;
    PhaseConvention conv_;
};

/// rho(theta) = U(theta) rho U(theta)^dagger, derivative -i[H, rho(theta)].
PhaseFamily unitary_orbit(const DensityMatrix &base, const PhaseConvention &conv);
/// rho(theta) = noise(U(theta) rho U(theta)^dagger) for a theta-free channel.
PhaseFamily channel_orbit(const KrausChannel &noise, const DensityMatrix &base, const PhaseConvention &conv);

/// Sends each conditional state to its phase family.
using ChannelMap = std::function<PhaseFamily(const DensityMatrix &)>;
ChannelMap noiseless_map(const PhaseConvention &conv);
ChannelMap noisy_map(const KrausChannel &noise, const PhaseConvention &conv);

struct LocalElement {
    double probability;
    LocalState state;
};

struct LocalSetting {
    std::string name;
    std::vector<LocalElement> outcomes;
};

/// An assemblage whose states are resolved, with derivatives, at one theta.
struct LocalAssemblage {
    std::vector<LocalSetting> settings;
};

LocalAssemblage evaluate(const Assemblage &asm_, const ChannelMap &map, double theta);

struct ControlBranch {
    ControlOutcome outcome;
    double probability;
    LocalAssemblage assemblage;
};

/// Routes every conditional state through the controlled superposition of two
/// copies of `noise` (a dilation of the theta-free noise; the phase is applied
/// before it), projects the control onto |+->, and re-weights Alice's outcomes
/// by the joint probabilities. Branches with probability below
/// tol::kBranchProbability are omitted.
std::vector<ControlBranch> conditioned_assemblages(
    const Assemblage &asm_, const DilationModel &noise, const ControlState &control, double theta,
    const PhaseConvention &conv);

}  // namespace qsteer

#endif

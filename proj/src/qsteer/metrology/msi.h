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

#ifndef QSTEER_METROLOGY_MSI_H
#define QSTEER_METROLOGY_MSI_H

#include <optional>
#include <string>
#include <vector>

#include "qsteer/channels/channels.h"
#include "qsteer/metrology/assemblage.h"
#include "qsteer/qmath/matrix.h"

namespace qsteer {

/// Per-setting averages sum_a p(a|A) F_Q and sum_a p(a|A) Var.
struct SettingFigures {
    std::string name;
    double qfi_avg;
    double variance_avg;
};

struct BranchFigures {
    ControlOutcome outcome;
    double probability;
    double f_opt;
    double four_var_opt;
    std::vector<SettingFigures> settings;
};

struct MsiReport {
    double f_opt = 0.0;
    double four_var_opt = 0.0;
    double violation = 0.0;
    std::vector<SettingFigures> settings;
    /// Populated by branch_averaged_msi.
    std::vector<BranchFigures> branches;
};

std::vector<SettingFigures> setting_figures(const LocalAssemblage &asm_, const HermitianObservable &h);

/// max_A sum_a p(a|A) F_Q(rho_{a|A}). Throws on an empty assemblage.
double optimal_qfi(const LocalAssemblage &asm_);
double optimal_qfi(const Assemblage &asm_, const ChannelMap &map, double theta);
/// min_A sum_a p(a|A) Var(rho_{a|A}, h).
double optimal_variance(const LocalAssemblage &asm_, const HermitianObservable &h);
double optimal_variance(const Assemblage &asm_, const ChannelMap &map, double theta, const HermitianObservable &h);

/// max(F - 4 Delta, 0). Inputs below -1e-12 are rejected.
double msi_violation(double f_opt, double four_var_opt);

/// MSI figures for an assemblage pushed through `map` with no superposition.
MsiReport msi_report(const Assemblage &asm_, const ChannelMap &map, double theta, const HermitianObservable &h);

/// Branch-weighted F and 4 Delta over the two control outcomes. `noise` is a
/// dilation of the theta-free noise channel; the phase U(theta) is applied to
/// each conditional state first. When `h` is empty the convention's
/// Hamiltonian is used.
MsiReport branch_averaged_msi(
    const Assemblage &asm_, const DilationModel &noise, const ControlState &control, double theta,
    const PhaseConvention &conv, const std::optional<HermitianObservable> &h = std::nullopt);

/// max over settings A and measurements M of sum_a p(a|A) F(M).
double optimal_classical_fi(const LocalAssemblage &asm_, const std::vector<HermitianObservable> &measurements);
/// Branch average sum_+- P_+- F_opt,+-.
double optimal_classical_fi(
    const std::vector<ControlBranch> &branches, const std::vector<HermitianObservable> &measurements);

/// {sigma_y, sigma_z}.
std::vector<HermitianObservable> default_measurements();

}  // namespace qsteer

#endif

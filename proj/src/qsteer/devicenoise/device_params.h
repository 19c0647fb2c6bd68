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

#ifndef QSTEER_DEVICENOISE_DEVICE_PARAMS_H
#define QSTEER_DEVICENOISE_DEVICE_PARAMS_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsteer {

struct QubitParams {
    double t1_us;
    double t2_us;
    /// Single-qubit gate error.
    double gate_error;
    double readout_error;
    /// Hardware qubit label, informational only.
    std::string label;
};

struct PairParams {
    double cnot_error;
    double cnot_time_ns;
};

/// Calibration data keyed by circuit role. Pairs are unordered.
class DeviceParams {
   public:
    DeviceParams() = default;

    void set_qubit(const std::string &role, QubitParams p);
    void set_pair(const std::string &a, const std::string &b, PairParams p);
    /// Makes `alias` resolve to the parameters of `target`.
    void set_alias(const std::string &alias, const std::string &target);

    /// Pauli-X duration; Ry, Rz, Y and Z take the same time.
    double single_qubit_time_ns = 21.3;
    double h_factor = 5.0;
    double s_factor = 3.0;

    /// Alias-resolved role name. Throws std::invalid_argument when neither the
    /// role nor its alias target has parameters.
    std::string resolve(std::string_view role) const;
    bool has_qubit(std::string_view role) const;
    const QubitParams &qubit(std::string_view role) const;
    /// Alias-resolved lookup; nullopt for an uncalibrated pair.
    std::optional<PairParams> pair(std::string_view a, std::string_view b) const;
    /// Largest CNOT error and largest CNOT time over calibrated pairs, used
    /// for pairs without calibration.
    PairParams worst_pair() const;

    const std::map<std::string, QubitParams> &qubits() const {
        return qubits_;
    }
    const std::map<std::pair<std::string, std::string>, PairParams> &pairs() const {
        return pairs_;
    }
    const std::map<std::string, std::string> &aliases() const {
        return aliases_;
    }

    /// Times > 0 (infinity allowed for T1, T2), rates in [0, 1], aliases
    /// pointing at calibrated qubits, at least one pair.
    void validate() const;

   private:
    std::map<std::string, QubitParams> qubits_;
    std::map<std::pair<std::string, std::string>, PairParams> pairs_;
    std::map<std::string, std::string> aliases_;
};

/// Parses the INI-style calibration format:
///
///   [device]        single_qubit_time_ns, h_factor, s_factor
///   [qubit <role>]  t1_us, t2_us, gate_error, readout_error, label
///   [pair <a> <b>]  cnot_error, cnot_time_ns
///   [aliases]       <alias> = <role>
///
/// '#' and ';' start comments. Errors carry line numbers.
DeviceParams parse_device_params(std::string_view text);
DeviceParams load_device_params(const std::string &path);
std::string write_device_params(const DeviceParams &p);

/// The IBM Cairo calibration used throughout, with E1b and E2b aliased to E1
/// and E2 for the two-qubit environments of the depolarized circuit.
DeviceParams ibm_cairo_params();

/// Every role calibrated with infinite T1, T2 and zero error rates.
DeviceParams noiseless_params(const std::vector<std::string> &roles);

}  // namespace qsteer

#endif

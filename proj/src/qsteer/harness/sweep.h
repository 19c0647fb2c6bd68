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

#ifndef QSTEER_HARNESS_SWEEP_H
#define QSTEER_HARNESS_SWEEP_H

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsteer/channels/channels.h"
#include "qsteer/circuits/builders.h"
#include "qsteer/devicenoise/device_params.h"
#include "qsteer/devicenoise/lindblad.h"

namespace qsteer {

enum class NoiseKind { dephasing, depolarizing };
/// "deph" or "depo".
NoiseKind parse_noise_kind(std::string_view s);
std::string_view noise_kind_name(NoiseKind k);

enum class SweepMode { analytic, circuit, noisy_circuit };
/// "analytic", "circuit" or "circuit+devicenoise".
SweepMode parse_sweep_mode(std::string_view s);
std::string_view sweep_mode_name(SweepMode m);

/// "plus", "mixed", "alpha=<a>" (pure), "pure:<a>" or "mixed:<a>".
ControlState parse_control(std::string_view s);
/// Inverse of parse_control: "plus", "mixed", "pure:<a>", "mixed:<a>".
std::string control_label(const ControlState &c);

/// Inclusive grid start, start + step, ... up to stop.
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.1;

    /// "a:b:s", or a single value "a".
    static Grid parse(std::string_view s);
    std::vector<double> values() const;
};

struct SweepConfig {
    NoiseKind noise = NoiseKind::dephasing;
    Grid visibility;
    std::vector<ControlState> controls{ControlState::plus()};
    /// Evaluation point theta_0.
    double theta = 0.0;
    /// Points in the fitting grid, spanning one fringe period.
    std::size_t fit_points = 21;
    /// Shots per circuit setting; 0 uses exact probabilities.
    std::uint64_t shots = 10000;
    std::size_t rounds = 1;
    std::uint64_t seed = 1;
    PhaseConvention conv;
    SweepMode mode = SweepMode::analytic;
    /// Calibration file for circuit+devicenoise; empty selects IBM Cairo.
    std::string device_path;
    DephasingFormula formula = DephasingFormula::as_printed;
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;

    /// Throws std::invalid_argument on an empty grid, step <= 0, no
    /// controls, rounds == 0, or a fit grid that is even or below five points
    /// (theta_0 must be a grid point).
    void validate() const;
};

struct BranchDiagnostics {
    ControlOutcome outcome;
    double probability;
    double f_opt;
    double four_var_opt;
};

struct SweepRecord {
    SweepMode mode = SweepMode::analytic;
    NoiseKind noise = NoiseKind::dephasing;
    std::string control;
    double visibility = 0.0;
    double p_plus = 0.0;
    double f_opt_avg = 0.0;
    double four_var_opt_avg = 0.0;
    double violation = 0.0;
    /// Sample standard deviations over rounds; zero for a single round.
    double stderr_f = 0.0;
    double stderr_var = 0.0;
    /// Means over rounds; not serialized.
    std::vector<BranchDiagnostics> branches;
};

/// Branch-averaged MSI figures of one experiment.
struct PointEstimate {
    double p_plus = 0.0;
    double f_opt_avg = 0.0;
    double four_var_opt_avg = 0.0;
    std::vector<BranchDiagnostics> branches;

    double margin() const {
        return f_opt_avg - four_var_opt_avg;
    }
};

/// Exact QFI-based figures for the reference four-state assemblage.
PointEstimate analytic_point(NoiseKind noise, double visibility, const ControlState &control, double theta,
                             const PhaseConvention &conv);

/// Outcome distributions of the circuit experiment at one visibility: for
/// every preparation of the reference assemblage, sigma_y and sigma_z readout
/// of B on each angle of the fitting grid (shifted by theta_0).
struct CircuitExperiment {
    struct Run {
        PrepLabel prep;
        /// Preparation weight p(a|A) within its setting.
        double weight;
        /// [readout][grid index], readout 0 = sigma_y, 1 = sigma_z.
        std::vector<MeasurementRecord> records[2];
    };
    struct Setting {
        std::string name;
        std::vector<Run> runs;
    };
    std::vector<double> grid;
    std::size_t centre = 0;
    std::vector<Setting> settings;
};

/// Simulates the experiment. `device` null gives noiseless circuits.
CircuitExperiment simulate_experiment(NoiseKind noise, double visibility, const ControlState &control,
                                      const SweepConfig &cfg, const DeviceParams *device);

/// Estimator applied to the experiment: fitted classical FI maximized over
/// setting and readout per branch, 4 eta^2 (1 - <Z>^2) from the sigma_z runs
/// at theta_0, branch weights from the sigma_y run at theta_0. With `rng`
/// each distribution is replaced by a sample of `shots` outcomes.
PointEstimate estimate(const CircuitExperiment &ex, const SweepConfig &cfg, std::mt19937_64 *rng);

/// One grid point: all rounds, averaged.
SweepRecord evaluate_point(const SweepConfig &cfg, const ControlState &control, double visibility,
                           std::uint64_t point_index, const DeviceParams *device);

struct SweepFailure {
    std::string control;
    double visibility;
    std::string message;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::vector<SweepFailure> failures;
};

/// Every control by every visibility, in that order. Points run on a thread
/// pool with per-point random streams, so output does not depend on the
/// thread count. A failing point is reported and the rest still run.
SweepResult run_sweep(const SweepConfig &cfg);

/// Calibration used by a config: the file when given, IBM Cairo otherwise.
DeviceParams resolve_device(const SweepConfig &cfg);

/// Boundary between f > 0 and f <= 0 inside [lo, hi], by bisection to
/// `tol`. Returns nullopt when both ends fall on the same side.
std::optional<double> find_crossing(const std::function<double(double)> &f, double lo, double hi,
                                    double tol = 1e-4);

}  // namespace qsteer

#endif

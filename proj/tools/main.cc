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

// qsteer command-line front end: sweeps, reports and device bookkeeping.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsteer/circuits/builders.h"
#include "qsteer/circuits/circuit_io.h"
#include "qsteer/devicenoise/device_params.h"
#include "qsteer/devicenoise/pipeline.h"
#include "qsteer/harness/config.h"
#include "qsteer/harness/csv.h"
#include "qsteer/harness/report.h"
#include "qsteer/harness/sweep.h"

namespace {

using namespace qsteer;

struct SweepFlags {
    std::string config;
    std::string noise;
    std::vector<std::string> controls;
    std::string w_grid;
    double eta = 0.5;
    double theta = 0.0;
    std::size_t threads = 0;
    std::size_t fit_points = 21;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t rounds = 0;
    std::string device;
    std::string dephasing;
    bool noisy = false;
    bool ideal = false;
    std::string out;

    CLI::Option *o_noise = nullptr, *o_control = nullptr, *o_grid = nullptr, *o_eta = nullptr, *o_theta = nullptr,
                *o_threads = nullptr, *o_fit = nullptr, *o_shots = nullptr, *o_seed = nullptr, *o_rounds = nullptr,
                *o_device = nullptr, *o_dephasing = nullptr;
};

void add_common(CLI::App *sub, SweepFlags &f) {
    sub->add_option("--config", f.config, "key = value file; flags given here override it")->check(CLI::ExistingFile);
    f.o_noise = sub->add_option("--noise", f.noise, "deph or depo")->check(CLI::IsMember({"deph", "depo"}));
    f.o_control = sub->add_option("--control", f.controls, "plus, mixed, alpha=<x>, pure:<x> or mixed:<x>")
                      ->delimiter(',');
    f.o_grid = sub->add_option("--w-grid,--visibility", f.w_grid, "visibility grid a:b:s or a single value");
    f.o_eta = sub->add_option("--eta", f.eta, "phase convention, 0.5 or 1");
    f.o_theta = sub->add_option("--theta", f.theta, "evaluation point theta_0");
    f.o_threads = sub->add_option("--threads", f.threads, "worker threads, 0 for all cores");
    sub->add_option("--out", f.out, "output CSV (stdout when omitted)");
}

SweepConfig build_config(const SweepFlags &f, SweepMode default_mode) {
    SweepConfig cfg;
    if (!f.config.empty()) {
        cfg = load_config(f.config);
    } else {
        cfg.mode = default_mode;
    }
    std::map<std::string, std::string> kv;
    auto set = [&](CLI::Option *o, const char *key) {
        if (o && o->count() > 0) {
            kv[key] = o->as<std::string>();
        }
    };
    set(f.o_noise, "noise");
    set(f.o_grid, "visibility");
    set(f.o_eta, "eta");
    set(f.o_theta, "theta");
    set(f.o_threads, "threads");
    set(f.o_fit, "fit_points");
    set(f.o_shots, "shots");
    set(f.o_seed, "seed");
    set(f.o_rounds, "rounds");
    set(f.o_device, "device");
    set(f.o_dephasing, "dephasing");
    if (f.o_control->count() > 0) {
        std::string joined;
        for (const auto &c : f.controls) {
            joined += (joined.empty() ? "" : ",") + c;
        }
        kv["control"] = joined;
    }
    apply_config(kv, cfg);
    return cfg;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << text;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_and_emit(const SweepConfig &cfg, const std::string &out) {
    auto result = run_sweep(cfg);
    write_output(out, emit_csv(result.records));
    for (const auto &f : result.failures) {
        std::cerr << "qsteer: point control=" << f.control << " visibility=" << f.visibility << " failed: " << f.message
                  << '\n';
    }
    return result.failures.empty() ? 0 : 3;
}

struct CircuitFlags {
    std::string circuit = "fig3";
    std::string device;
    std::string prep = "plus";
    std::string readout = "y";
    std::string control = "plus";
    double visibility = 0.5;
    double theta = 0.0;
    double eta = 0.5;
    std::string out;
};

void add_circuit_choice(CLI::App *sub, CircuitFlags &f) {
    sub->add_option("--prep", f.prep, "input state of B: plus, minus, zero, one")->capture_default_str();
    sub->add_option("--readout", f.readout, "basis on B: y, z or none")
        ->check(CLI::IsMember({"y", "z", "none"}))
        ->capture_default_str();
    sub->add_option("--visibility,-w", f.visibility, "noise visibility w or v")->capture_default_str();
    sub->add_option("--theta", f.theta, "phase")->capture_default_str();
    sub->add_option("--eta", f.eta, "phase convention, 0.5 or 1")->capture_default_str();
    sub->add_option("--control", f.control, "control state (member 0 for incoherent controls)")
        ->capture_default_str();
}

Circuit choose_circuit(const CircuitFlags &f) {
    if (f.circuit != "fig3" && f.circuit != "appendix") {
        return parse_circuit(read_file(f.circuit));
    }
    BuildOptions opts;
    opts.conv = PhaseConvention(f.eta);
    opts.readout = f.readout == "y" ? Readout::sigma_y : f.readout == "z" ? Readout::sigma_z : Readout::none;
    opts.control = parse_control(f.control);
    const PrepLabel prep = parse_prep_label(f.prep);
    auto e = f.circuit == "fig3" ? build_dephased_ensemble(f.visibility, f.theta, prep, opts)
                                 : build_depolarized_ensemble(f.visibility, f.theta, prep, opts);
    return e.members.front().circuit;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsteer: steering-enhanced metrology under superposed noisy phase shifts"};
    app.require_subcommand(1);

    SweepFlags theory;
    auto *th = app.add_subcommand("theory", "analytic sweep of F_opt^avg, 4Var_opt^avg and the violation");
    add_common(th, theory);

    SweepFlags circ;
    auto *ci = app.add_subcommand("circuit", "sampled circuit sweep with the sinusoidal-fit estimator");
    add_common(ci, circ);
    circ.o_fit = ci->add_option("--fit-points", circ.fit_points, "odd number of phase points per fringe, >= 5");
    circ.o_shots = ci->add_option("--shots", circ.shots, "shots per circuit setting, 0 for exact probabilities");
    circ.o_seed = ci->add_option("--seed", circ.seed, "base seed");
    circ.o_rounds = ci->add_option("--rounds", circ.rounds, "repetition rounds per point");
    circ.o_device = ci->add_option("--device", circ.device, "calibration file; enables device noise")
                        ->check(CLI::ExistingFile);
    circ.o_dephasing = ci->add_option("--dephasing", circ.dephasing, "T2 rate formula: as-printed or standard")
                           ->check(CLI::IsMember({"as-printed", "standard"}));
    ci->add_flag("--noisy", circ.noisy, "device noise with the bundled IBM Cairo calibration");
    ci->add_flag("--ideal", circ.ideal, "noiseless circuit even when the config selects device noise");

    std::string report_in, report_emit = "table", report_out;
    auto *rp = app.add_subcommand("report", "turn a sweep CSV into gnuplot blocks or a text table");
    rp->add_option("--in", report_in, "sweep CSV")->required()->check(CLI::ExistingFile);
    rp->add_option("--emit", report_emit, "gnuplot or table")
        ->check(CLI::IsMember({"gnuplot", "table"}))
        ->capture_default_str();
    rp->add_option("--out", report_out, "output file (stdout when omitted)");

    CircuitFlags check;
    auto *ce = app.add_subcommand("check-errors", "accumulated gate error and total gate time of a circuit");
    ce->add_option("--circuit", check.circuit, "fig3, appendix or a circuit file")->capture_default_str();
    ce->add_option("--device", check.device, "calibration file (bundled IBM Cairo when omitted)")
        ->check(CLI::ExistingFile);
    add_circuit_choice(ce, check);

    CircuitFlags exp;
    auto *ex = app.add_subcommand("export-circuit", "write a built circuit in the text format");
    ex->add_option("--circuit", exp.circuit, "fig3 or appendix")
        ->check(CLI::IsMember({"fig3", "appendix"}))
        ->capture_default_str();
    ex->add_option("--out", exp.out, "output file (stdout when omitted)");
    add_circuit_choice(ex, exp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (th->parsed()) {
            SweepConfig cfg = build_config(theory, SweepMode::analytic);
            cfg.mode = SweepMode::analytic;
            return run_and_emit(cfg, theory.out);
        }
        if (ci->parsed()) {
            SweepConfig cfg = build_config(circ, SweepMode::circuit);
            if (cfg.mode == SweepMode::analytic) {
                cfg.mode = SweepMode::circuit;
            }
            if (circ.noisy || circ.o_device->count() > 0) {
                cfg.mode = SweepMode::noisy_circuit;
            }
            if (circ.ideal) {
                cfg.mode = SweepMode::circuit;
            }
            return run_and_emit(cfg, circ.out);
        }
        if (rp->parsed()) {
            auto records = parse_csv(read_file(report_in));
            write_output(report_out, render_report(records, parse_report_format(report_emit)));
            return 0;
        }
        if (ce->parsed()) {
            const DeviceParams params = check.device.empty() ? ibm_cairo_params() : load_device_params(check.device);
            const Circuit c = choose_circuit(check);
            std::printf("gamma_total %.6f\n", accumulate_gate_error(c, params));
            std::printf("total_time_ns %.1f\n", total_gate_time(c, params));
            std::printf("cnot_count %zu\n", c.expanded_cnot_count());
            std::printf("single_qubit_gates %zu\n", c.single_qubit_gate_count());
            return 0;
        }
        if (ex->parsed()) {
            write_output(exp.out, write_circuit(choose_circuit(exp)));
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "qsteer: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

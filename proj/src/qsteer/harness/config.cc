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

#include "qsteer/harness/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsteer {

namespace {

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return {};
    }
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

template <typename T>
T parse_number(const std::string &key, const std::string &v) {
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
        throw std::invalid_argument("config key '" + key + "': bad value '" + v + "'");
    }
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto h = line.find('#'); h != std::string_view::npos) {
            line = line.substr(0, h);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": empty key");
        }
        if (!out.emplace(key, trim(line.substr(eq + 1))).second) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

void apply_config(const std::map<std::string, std::string> &kv, SweepConfig &cfg) {
    for (const auto &[key, v] : kv) {
        if (key == "noise") {
            cfg.noise = parse_noise_kind(v);
        } else if (key == "mode") {
            cfg.mode = parse_sweep_mode(v);
        } else if (key == "visibility" || key == "w_grid") {
            cfg.visibility = Grid::parse(v);
        } else if (key == "control") {
            cfg.controls.clear();
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ',')) {
                cfg.controls.push_back(parse_control(trim(item)));
            }
        } else if (key == "theta") {
            cfg.theta = parse_number<double>(key, v);
        } else if (key == "fit_points") {
            cfg.fit_points = parse_number<std::size_t>(key, v);
        } else if (key == "shots") {
            cfg.shots = parse_number<std::uint64_t>(key, v);
        } else if (key == "rounds") {
            cfg.rounds = parse_number<std::size_t>(key, v);
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(key, v);
        } else if (key == "eta") {
            cfg.conv = PhaseConvention(parse_number<double>(key, v));
        } else if (key == "device") {
            cfg.device_path = v;
        } else if (key == "dephasing") {
            cfg.formula = parse_dephasing_formula(v);
        } else if (key == "threads") {
            cfg.threads = parse_number<std::size_t>(key, v);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

SweepConfig load_config(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open config file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    SweepConfig cfg;
    apply_config(parse_key_values(ss.str()), cfg);
    return cfg;
}

std::string write_config(const SweepConfig &cfg) {
    std::ostringstream out;
    out << "noise = " << noise_kind_name(cfg.noise) << '\n';
    out << "mode = " << sweep_mode_name(cfg.mode) << '\n';
    out << "visibility = " << fmt(cfg.visibility.start) << ':' << fmt(cfg.visibility.stop) << ':'
        << fmt(cfg.visibility.step) << '\n';
    out << "control = ";
    for (std::size_t i = 0; i < cfg.controls.size(); ++i) {
        out << (i ? "," : "") << control_label(cfg.controls[i]);
    }
    out << '\n';
    out << "theta = " << fmt(cfg.theta) << '\n';
    out << "fit_points = " << cfg.fit_points << '\n';
    out << "shots = " << cfg.shots << '\n';
    out << "rounds = " << cfg.rounds << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "eta = " << fmt(cfg.conv.eta()) << '\n';
    if (!cfg.device_path.empty()) {
        out << "device = " << cfg.device_path << '\n';
    }
    out << "dephasing = " << dephasing_formula_name(cfg.formula) << '\n';
    out << "threads = " << cfg.threads << '\n';
    return out.str();
}

}  // namespace qsteer

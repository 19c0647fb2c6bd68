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

#include "qsteer/devicenoise/device_params.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qsteer {

namespace {

std::pair<std::string, std::string> pair_key(std::string a, std::string b) {
    if (b < a) {
        std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> words(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

double parse_number(const std::string &s, const std::string &where) {
    if (s == "inf" || s == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(where + "bad number '" + s + "'");
    }
    return v;
}

std::string fmt(double x) {
    if (std::isinf(x)) {
        return "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void check_rate(double x, const std::string &what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(what + " must lie in [0, 1]");
    }
}

void check_time(double x, const std::string &what) {
    if (!(x > 0.0)) {
        throw std::invalid_argument(what + " must be positive");
    }
}

}  // namespace

void DeviceParams::set_qubit(const std::string &role, QubitParams p) {
    qubits_[role] = std::move(p);
}

void DeviceParams::set_pair(const std::string &a, const std::string &b, PairParams p) {
    if (a == b) {
        throw std::invalid_argument("pair needs two distinct roles");
    }
    pairs_[pair_key(a, b)] = p;
}

void DeviceParams::set_alias(const std::string &alias, const std::string &target) {
    if (alias == target) {
        throw std::invalid_argument("alias points at itself: " + alias);
    }
    aliases_[alias] = target;
}

std::string DeviceParams::resolve(std::string_view role) const {
    std::string r(role);
    if (qubits_.count(r)) {
        return r;
    }
    if (auto it = aliases_.find(r); it != aliases_.end() && qubits_.count(it->second)) {
        return it->second;
    }
    throw std::invalid_argument("no device parameters for role '" + r + "'");
}

bool DeviceParams::has_qubit(std::string_view role) const {
    try {
        resolve(role);
        return true;
    } catch (const std::invalid_argument &) {
        return false;
    }
}

const QubitParams &DeviceParams::qubit(std::string_view role) const {
    return qubits_.at(resolve(role));
}

std::optional<PairParams> DeviceParams::pair(std::string_view a, std::string_view b) const {
    auto it = pairs_.find(pair_key(resolve(a), resolve(b)));
    if (it == pairs_.end()) {
        return std::nullopt;
    }
    return it->second;
}

PairParams DeviceParams::worst_pair() const {
    if (pairs_.empty()) {
        throw std::invalid_argument("device has no calibrated pairs");
    }
    PairParams w{0.0, 0.0};
    for (const auto &[k, p] : pairs_) {
        w.cnot_error = std::max(w.cnot_error, p.cnot_error);
        w.cnot_time_ns = std::max(w.cnot_time_ns, p.cnot_time_ns);
    }
    return w;
}

void DeviceParams::validate() const {
    check_time(single_qubit_time_ns, "single_qubit_time_ns");
    check_time(h_factor, "h_factor");
    check_time(s_factor, "s_factor");
    for (const auto &[role, q] : qubits_) {
        check_time(q.t1_us, "t1_us of " + role);
        check_time(q.t2_us, "t2_us of " + role);
        check_rate(q.gate_error, "gate_error of " + role);
        check_rate(q.readout_error, "readout_error of " + role);
    }
    for (const auto &[k, p] : pairs_) {
        const std::string name = k.first + "-" + k.second;
        if (!qubits_.count(k.first) || !qubits_.count(k.second)) {
            throw std::invalid_argument("pair " + name + " names an uncalibrated qubit");
        }
        check_rate(p.cnot_error, "cnot_error of " + name);
        check_time(p.cnot_time_ns, "cnot_time_ns of " + name);
    }
    for (const auto &[alias, target] : aliases_) {
        if (!qubits_.count(target)) {
            throw std::invalid_argument("alias " + alias + " points at uncalibrated role " + target);
        }
    }
    if (pairs_.empty()) {
        throw std::invalid_argument("device has no calibrated pairs");
    }
}

DeviceParams parse_device_params(std::string_view text) {
    DeviceParams out;
    enum class Section { none, device, qubit, pair, aliases } section = Section::none;
    std::string role_a, role_b;
    std::map<std::string, std::map<std::string, std::string>> qubit_fields;
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> pair_fields;
    std::map<std::pair<std::string, std::string>, std::size_t> pair_lines;
    std::map<std::string, std::size_t> qubit_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        std::string_view line = raw;
        if (auto c = line.find_first_of("#;"); c != std::string_view::npos) {
            line = line.substr(0, c);
        }
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw std::invalid_argument(where + "unterminated section header");
            }
            auto w = words(std::string_view(t).substr(1, t.size() - 2));
            if (w.size() == 1 && w[0] == "device") {
                section = Section::device;
            } else if (w.size() == 1 && w[0] == "aliases") {
                section = Section::aliases;
            } else if (w.size() == 2 && w[0] == "qubit") {
                section = Section::qubit;
                role_a = w[1];
                qubit_fields[role_a];
                qubit_lines.emplace(role_a, line_no);
            } else if (w.size() == 3 && w[0] == "pair") {
                section = Section::pair;
                role_a = w[1];
                role_b = w[2];
                pair_fields[{role_a, role_b}];
                pair_lines.emplace(std::pair{role_a, role_b}, line_no);
            } else {
                throw std::invalid_argument(where + "unknown section '" + t + "'");
            }
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(where + "expected key = value");
        }
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        switch (section) {
            case Section::none:
                throw std::invalid_argument(where + "key outside any section");
            case Section::device:
                if (key == "single_qubit_time_ns") {
                    out.single_qubit_time_ns = parse_number(value, where);
                } else if (key == "h_factor") {
                    out.h_factor = parse_number(value, where);
                } else if (key == "s_factor") {
                    out.s_factor = parse_number(value, where);
                } else if (key != "name") {
                    throw std::invalid_argument(where + "unknown device key '" + key + "'");
                }
                break;
            case Section::qubit:
                qubit_fields[role_a][key] = value;
                break;
            case Section::pair:
                pair_fields[{role_a, role_b}][key] = value;
                break;
            case Section::aliases:
                out.set_alias(key, value);
                break;
        }
    }

    auto take = [](std::map<std::string, std::string> &f, const char *key, const std::string &where) {
        auto it = f.find(key);
        if (it == f.end()) {
            throw std::invalid_argument(where + "missing '" + key + "'");
        }
        double v = parse_number(it->second, where);
        f.erase(it);
        return v;
    };
    for (auto &[role, f] : qubit_fields) {
        const std::string where = "line " + std::to_string(qubit_lines[role]) + ": qubit " + role + ": ";
        QubitParams q;
        q.t1_us = take(f, "t1_us", where);
        q.t2_us = take(f, "t2_us", where);
        q.gate_error = take(f, "gate_error", where);
        q.readout_error = take(f, "readout_error", where);
        if (auto it = f.find("label"); it != f.end()) {
            q.label = it->second;
            f.erase(it);
        }
        if (!f.empty()) {
            throw std::invalid_argument(where + "unknown key '" + f.begin()->first + "'");
        }
        out.set_qubit(role, q);
    }
    for (auto &[k, f] : pair_fields) {
        const std::string where = "line " + std::to_string(pair_lines[k]) + ": pair " + k.first + " " + k.second + ": ";
        PairParams p;
        p.cnot_error = take(f, "cnot_error", where);
        p.cnot_time_ns = take(f, "cnot_time_ns", where);
        if (!f.empty()) {
            throw std::invalid_argument(where + "unknown key '" + f.begin()->first + "'");
        }
        out.set_pair(k.first, k.second, p);
    }
    out.validate();
    return out;
}

DeviceParams load_device_params(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open device parameter file " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_device_params(ss.str());
}

std::string write_device_params(const DeviceParams &p) {
    std::ostringstream out;
    out << "[device]\n";
    out << "single_qubit_time_ns = " << fmt(p.single_qubit_time_ns) << '\n';
    out << "h_factor = " << fmt(p.h_factor) << '\n';
    out << "s_factor = " << fmt(p.s_factor) << '\n';
    for (const auto &[role, q] : p.qubits()) {
        out << "\n[qubit " << role << "]\n";
        if (!q.label.empty()) {
            out << "label = " << q.label << '\n';
        }
        out << "t1_us = " << fmt(q.t1_us) << '\n';
        out << "t2_us = " << fmt(q.t2_us) << '\n';
        out << "gate_error = " << fmt(q.gate_error) << '\n';
        out << "readout_error = " << fmt(q.readout_error) << '\n';
    }
    for (const auto &[k, pp] : p.pairs()) {
        out << "\n[pair " << k.first << ' ' << k.second << "]\n";
        out << "cnot_error = " << fmt(pp.cnot_error) << '\n';
        out << "cnot_time_ns = " << fmt(pp.cnot_time_ns) << '\n';
    }
    if (!p.aliases().empty()) {
        out << "\n[aliases]\n";
        for (const auto &[a, t] : p.aliases()) {
            out << a << " = " << t << '\n';
        }
    }
    return out.str();
}

DeviceParams ibm_cairo_params() {
    DeviceParams p;
    p.single_qubit_time_ns = 21.3;
    p.h_factor = 5.0;
    p.s_factor = 3.0;
    p.set_qubit("B", {118.4, 194.5, 1.5e-4, 1.0e-2, "25"});
    p.set_qubit("C", {122.2, 196.5, 4.7e-4, 1.5e-2, "24"});
    p.set_qubit("E1", {84.1, 44.1, 1.7e-4, 1.0e-3, "26"});
    p.set_qubit("E2", {102.3, 138.4, 3.0e-4, 2.1e-2, "22"});
    p.set_pair("B", "C", {6.8e-3, 309.3});
    p.set_pair("B", "E1", {6.6e-3, 248.9});
    p.set_pair("B", "E2", {9.0e-3, 202.7});
    p.set_alias("E1b", "E1");
    p.set_alias("E2b", "E2");
    return p;
}

DeviceParams noiseless_params(const std::vector<std::string> &roles) {
    const double inf = std::numeric_limits<double>::infinity();
    DeviceParams p;
    for (const auto &r : roles) {
        p.set_qubit(r, {inf, inf, 0.0, 0.0, ""});
    }
    for (std::size_t i = 0; i < roles.size(); ++i) {
        for (std::size_t j = i + 1; j < roles.size(); ++j) {
            p.set_pair(roles[i], roles[j], {0.0, 300.0});
        }
    }
    return p;
}

}  // namespace qsteer

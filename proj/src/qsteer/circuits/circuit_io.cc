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

#include "qsteer/circuits/circuit_io.h"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qsteer {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

double parse_double(const std::string &s, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

std::size_t parse_qubit(const std::string &s, const Circuit &c, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) {
        return v;
    }
    try {
        return c.qubit(s);
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("line " + std::to_string(line) + ": unknown qubit '" + s + "'");
    }
}

}  // namespace

std::string write_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "roles";
    for (const auto &r : c.roles()) {
        out << ' ' << r;
    }
    out << '\n';
    if (!c.measured().empty()) {
        out << "measure";
        for (auto q : c.measured()) {
            out << ' ' << c.roles()[q];
        }
        out << '\n';
    }
    for (const auto &op : c.operations()) {
        out << gate_name(op.gate.kind) << ' ';
        for (std::size_t i = 0; i < op.gate.qubits.size(); ++i) {
            out << (i ? "," : "") << op.gate.qubits[i];
        }
        if (gate_has_angle(op.gate.kind)) {
            out << ' ' << format_double(op.gate.angle);
        }
        const auto &a = op.annotation;
        if (a.duration_ns) {
            out << " duration=" << format_double(*a.duration_ns);
        }
        if (a.error_rate) {
            out << " error=" << format_double(*a.error_rate);
        }
        if (a.cnot_equivalent) {
            out << " cnots=" << *a.cnot_equivalent;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    for (const auto &raw : split(text, '\n')) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = tokens(line);
        if (tok.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (tok[0] == "roles") {
            if (circuit) {
                throw std::invalid_argument(where + "duplicate roles header");
            }
            circuit.emplace(std::vector<std::string>(tok.begin() + 1, tok.end()));
            continue;
        }
        if (!circuit) {
            throw std::invalid_argument(where + "expected a roles header first");
        }
        if (tok[0] == "measure") {
            std::vector<std::size_t> qs;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                qs.push_back(parse_qubit(tok[i], *circuit, line_no));
            }
            circuit->set_measured(std::move(qs));
            continue;
        }
        GateKind kind;
        try {
            kind = parse_gate_kind(tok[0]);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(where + e.what());
        }
        if (tok.size() < 2) {
            throw std::invalid_argument(where + "missing qubit list");
        }
        Gate g{kind, {}, 0.0};
        for (const auto &q : split(tok[1], ',')) {
            g.qubits.push_back(parse_qubit(q, *circuit, line_no));
        }
        std::size_t next = 2;
        if (gate_has_angle(kind)) {
            if (tok.size() < 3) {
                throw std::invalid_argument(where + "missing angle");
            }
            g.angle = parse_double(tok[2], line_no);
            next = 3;
        }
        GateAnnotation ann;
        for (; next < tok.size(); ++next) {
            auto eq = tok[next].find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument(where + "unexpected token '" + tok[next] + "'");
            }
            std::string key = tok[next].substr(0, eq);
            std::string value = tok[next].substr(eq + 1);
            if (key == "duration") {
                ann.duration_ns = parse_double(value, line_no);
            } else if (key == "error") {
                ann.error_rate = parse_double(value, line_no);
            } else if (key == "cnots") {
                ann.cnot_equivalent = static_cast<std::size_t>(parse_double(value, line_no));
            } else {
                throw std::invalid_argument(where + "unknown annotation '" + key + "'");
            }
        }
        try {
            circuit->append(std::move(g), ann);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(where + e.what());
        }
    }
    if (!circuit) {
        throw std::invalid_argument("circuit text has no roles header");
    }
    return *std::move(circuit);
}

}  // namespace qsteer

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

#include "qsteer/harness/csv.h"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsteer {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_field(const std::string &s, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

}  // namespace

std::string emit_csv(const std::vector<SweepRecord> &records) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        out << sweep_mode_name(r.mode) << ',' << noise_kind_name(r.noise) << ',' << r.control << ','
            << fmt(r.visibility) << ',' << fmt(r.p_plus) << ',' << fmt(r.f_opt_avg) << ',' << fmt(r.four_var_opt_avg)
            << ',' << fmt(r.violation) << ',' << fmt(r.stderr_f) << ',' << fmt(r.stderr_var) << '\n';
    }
    return out.str();
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<SweepRecord> out;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!header) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": unexpected CSV header");
            }
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 10) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 10 fields");
        }
        SweepRecord r;
        try {
            r.mode = parse_sweep_mode(f[0]);
            r.noise = parse_noise_kind(f[1]);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
        r.control = f[2];
        r.visibility = parse_field(f[3], line_no);
        r.p_plus = parse_field(f[4], line_no);
        r.f_opt_avg = parse_field(f[5], line_no);
        r.four_var_opt_avg = parse_field(f[6], line_no);
        r.violation = parse_field(f[7], line_no);
        r.stderr_f = parse_field(f[8], line_no);
        r.stderr_var = parse_field(f[9], line_no);
        out.push_back(std::move(r));
    }
    if (!header) {
        throw std::invalid_argument("CSV has no header");
    }
    return out;
}

}  // namespace qsteer

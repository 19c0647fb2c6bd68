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

#include "qsteer/harness/report.h"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qsteer {

ReportFormat parse_report_format(std::string_view s) {
    if (s == "gnuplot") {
        return ReportFormat::gnuplot;
    }
    if (s == "table") {
        return ReportFormat::table;
    }
    throw std::invalid_argument("unknown report format: " + std::string(s));
}

std::string render_report(const std::vector<SweepRecord> &records, ReportFormat format) {
    std::ostringstream out;
    char buf[256];
    if (format == ReportFormat::table) {
        std::snprintf(buf, sizeof(buf), "%-20s %-5s %-10s %10s %10s %10s %10s %10s %10s %10s\n", "mode", "noise",
                      "control", "visibility", "p_plus", "F_opt", "4Var_opt", "violation", "sd_F", "sd_4Var");
        out << buf;
        for (const auto &r : records) {
            std::snprintf(buf, sizeof(buf), "%-20s %-5s %-10s %10.4f %10.6f %10.6f %10.6f %10.6f %10.2e %10.2e\n",
                          std::string(sweep_mode_name(r.mode)).c_str(), std::string(noise_kind_name(r.noise)).c_str(),
                          r.control.c_str(), r.visibility, r.p_plus, r.f_opt_avg, r.four_var_opt_avg, r.violation,
                          r.stderr_f, r.stderr_var);
            out << buf;
        }
        return out.str();
    }

    // Series in order of first appearance.
    std::vector<std::tuple<std::string, std::string, std::string>> order;
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<const SweepRecord *>> series;
    for (const auto &r : records) {
        auto key = std::make_tuple(std::string(sweep_mode_name(r.mode)), std::string(noise_kind_name(r.noise)),
                                   r.control);
        auto [it, fresh] = series.try_emplace(key);
        if (fresh) {
            order.push_back(key);
        }
        it->second.push_back(&r);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto &[mode, noise, control] = order[i];
        if (i) {
            out << "\n\n";
        }
        out << "# index " << i << ": mode=" << mode << " noise=" << noise << " control=" << control << '\n';
        out << "# visibility f_opt_avg four_var_opt_avg violation stderr_f stderr_var p_plus\n";
        for (const SweepRecord *r : series[order[i]]) {
            std::snprintf(buf, sizeof(buf), "%.10g %.10g %.10g %.10g %.10g %.10g %.10g\n", r->visibility,
                          r->f_opt_avg, r->four_var_opt_avg, r->violation, r->stderr_f, r->stderr_var, r->p_plus);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace qsteer

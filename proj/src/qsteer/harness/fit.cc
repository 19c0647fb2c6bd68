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

#include "qsteer/harness/fit.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qsteer/metrology/fisher.h"
#include "qsteer/qmath/tolerances.h"

namespace qsteer {

double FitModel::value(double theta) const {
    return degenerate ? 0.5 : 0.5 + alpha * std::sin(k * theta + beta);
}

double FitModel::derivative(double theta) const {
    return degenerate ? 0.0 : k * alpha * std::cos(k * theta + beta);
}

std::vector<double> default_theta_grid(const PhaseConvention &conv, std::size_t points) {
    if (points < 5) {
        throw std::invalid_argument("theta grid needs at least five points");
    }
    const double period = 2.0 * std::numbers::pi / conv.fringe_frequency();
    const double centre = 0.5 * static_cast<double>(points - 1);
    std::vector<double> out(points);
    for (std::size_t j = 0; j < points; ++j) {
        out[j] = (static_cast<double>(j) - centre) * period / static_cast<double>(points);
    }
    return out;
}

FitModel fit_sinusoid(std::span<const double> theta, std::span<const double> p, const PhaseConvention &conv) {
    if (theta.size() != p.size()) {
        throw std::invalid_argument("fit_sinusoid: angle and probability counts differ");
    }
    std::vector<double> sorted(theta.begin(), theta.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 5) {
        throw std::invalid_argument("fit_sinusoid: at least five distinct angles required");
    }
    const double k = conv.fringe_frequency();
    double ss = 0, sc = 0, cc = 0, sy = 0, cy = 0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double s = std::sin(k * theta[i]);
        const double c = std::cos(k * theta[i]);
        const double y = p[i] - 0.5;
        ss += s * s;
        sc += s * c;
        cc += c * c;
        sy += s * y;
        cy += c * y;
    }
    const double det = ss * cc - sc * sc;
    if (!(std::abs(det) > 1e-12 * (ss * cc))) {
        throw std::invalid_argument("fit_sinusoid: angles do not resolve the fringe");
    }
    const double a = (cc * sy - sc * cy) / det;  // alpha cos beta
    const double b = (ss * cy - sc * sy) / det;  // alpha sin beta

    FitModel fit;
    fit.k = k;
    fit.alpha = std::hypot(a, b);
    fit.degenerate = fit.alpha < 1e-12;
    if (fit.degenerate) {
        fit.alpha = 0.0;
        fit.beta = std::numeric_limits<double>::quiet_NaN();
    } else {
        fit.beta = std::atan2(b, a);
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double r = p[i] - 0.5 - a * std::sin(k * theta[i]) - b * std::cos(k * theta[i]);
        sq += r * r;
    }
    fit.residual = std::sqrt(sq / static_cast<double>(theta.size()));
    return fit;
}

double fi_from_fit(const FitModel &fit, double theta0) {
    if (fit.degenerate) {
        return 0.0;
    }
    const double g = fit.value(theta0);
    const double dg = fit.derivative(theta0);
    const double denom = g * (1.0 - g);
    if (denom <= tol::kDivergentProbability) {
        if (std::abs(dg) <= tol::kDivergentSlope) {
            return 0.0;
        }
        throw DivergentFisherInformation("fitted probability touches the boundary with non-zero slope");
    }
    return dg * dg / denom;
}

}  // namespace qsteer

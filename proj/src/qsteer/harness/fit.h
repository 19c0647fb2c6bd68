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

#ifndef QSTEER_HARNESS_FIT_H
#define QSTEER_HARNESS_FIT_H

#include <span>
#include <vector>

#include "qsteer/channels/channels.h"

namespace qsteer {

/// g(theta) = 0.5 + alpha sin(k theta + beta), alpha >= 0.
struct FitModel {
    double alpha = 0.0;
    /// NaN when the fit is degenerate.
    double beta = 0.0;
    /// Root-mean-square residual over the fitted points.
    double residual = 0.0;
    double k = 1.0;
    /// Constant data: alpha is zero and beta is undefined.
    bool degenerate = false;

    /// The fitted curve stays inside [0, 1]. Unconstrained least squares can
    /// overshoot slightly on sampled data; the amplitude is left as fitted.
    bool physical() const {
        return alpha <= 0.5 + 1e-6;
    }
    double value(double theta) const;
    double derivative(double theta) const;
};

/// `points` equally spaced angles covering one fringe period 2 pi / k,
/// centred on zero: theta_j = (j - (points - 1) / 2) * period / points.
std::vector<double> default_theta_grid(const PhaseConvention &conv, std::size_t points = 21);

/// Linear least squares for (alpha cos beta, alpha sin beta) on the sin and
/// cos regressors with k = conv.fringe_frequency(). Needs at least five
/// distinct angles.
FitModel fit_sinusoid(std::span<const double> theta, std::span<const double> p, const PhaseConvention &conv);

/// Two-outcome Fisher information g'(theta0)^2 / (g (1 - g)) from the fitted
/// curve. Zero for a degenerate fit. Throws DivergentFisherInformation when g
/// touches 0 or 1 with a non-zero slope.
double fi_from_fit(const FitModel &fit, double theta0);

}  // namespace qsteer

#endif

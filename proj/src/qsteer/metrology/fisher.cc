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

#include "qsteer/metrology/fisher.h"

#include <cmath>
#include <string>

#include "qsteer/qmath/tolerances.h"

namespace qsteer {

HermitianObservable sld(const DensityMatrix &rho, const ComplexMatrix &drho) {
    if (drho.rows() != static_cast<Eigen::Index>(rho.dim()) || drho.cols() != drho.rows()) {
        throw std::invalid_argument("sld: derivative has the wrong dimension");
    }
    if (!is_hermitian(drho, tol::kHermitian)) {
        throw std::invalid_argument("sld: derivative is not Hermitian");
    }
    if (std::abs(drho.trace()) > tol::kTraceless) {
        throw std::invalid_argument("sld: derivative is not traceless");
    }
    auto e = eig_hermitian(rho.matrix());
    const auto n = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix d = e.vectors.adjoint() * drho * e.vectors;
    ComplexMatrix l = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index j = 0; j < n; ++j) {
            double s = e.values[k] + e.values[j];
            if (s > tol::kSldSupport) {
                l(k, j) = 2.0 * d(k, j) / s;
            }
        }
    }
    ComplexMatrix out = e.vectors * l * e.vectors.adjoint();
    return HermitianObservable::from_matrix(0.5 * (out + out.adjoint()));
}

double qfi(const DensityMatrix &rho, const ComplexMatrix &drho) {
    ComplexMatrix l = sld(rho, drho).matrix();
    double f = (l * l * rho.matrix()).trace().real();
    return f < 0.0 ? 0.0 : f;
}

double qfi(const LocalState &s) {
    return qfi(s.rho, s.drho);
}

double qfi(const PhaseFamily &family, double theta) {
    return qfi(family.at(theta));
}

double variance(const DensityMatrix &rho, const HermitianObservable &h) {
    if (h.dim() != rho.dim()) {
        throw std::invalid_argument("variance: dimension mismatch");
    }
    double mean = rho.expectation(h.matrix());
    double second = rho.expectation(h.matrix() * h.matrix());
    return second - mean * mean;
}

double classical_fi(const OutcomeDistribution &dist) {
    if (dist.p.size() != dist.dp.size() || dist.p.empty()) {
        throw std::invalid_argument("classical_fi: malformed distribution");
    }
    double f = 0.0;
    for (std::size_t b = 0; b < dist.p.size(); ++b) {
        if (dist.p[b] < tol::kDivergentProbability) {
            if (std::abs(dist.dp[b]) > tol::kDivergentSlope) {
                throw DivergentFisherInformation("outcome " + std::to_string(b) +
                                                 " has zero probability and nonzero slope");
            }
            continue;
        }
        f += dist.dp[b] * dist.dp[b] / dist.p[b];
    }
    return f;
}

double classical_fi(const ProbabilityCurve &curve, double theta0) {
    return classical_fi(curve(theta0));
}

OutcomeDistribution measurement_distribution(const LocalState &s, const HermitianObservable &observable) {
    if (observable.dim() != s.rho.dim()) {
        throw std::invalid_argument("measurement_distribution: dimension mismatch");
    }
    auto e = eig_hermitian(observable);
    OutcomeDistribution out;
    const auto n = static_cast<Eigen::Index>(observable.dim());
    Eigen::Index k = 0;
    while (k < n) {
        // Group degenerate eigenvalues into one projector.
        Eigen::Index end = k + 1;
        while (end < n && std::abs(e.values[k] - e.values[end]) < tol::kDegeneracy) {
            ++end;
        }
        ComplexMatrix v = e.vectors.middleCols(k, end - k);
        ComplexMatrix proj = v * v.adjoint();
        out.p.push_back((proj * s.rho.matrix()).trace().real());
        out.dp.push_back((proj * s.drho).trace().real());
        k = end;
    }
    return out;
}

ProbabilityCurve measurement_curve(const PhaseFamily &family, const HermitianObservable &observable) {
    return [family, observable](double theta) { return measurement_distribution(family.at(theta), observable); };
}

}  // namespace qsteer

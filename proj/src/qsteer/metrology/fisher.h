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

#ifndef QSTEER_METROLOGY_FISHER_H
#define QSTEER_METROLOGY_FISHER_H

#include <functional>
#include <stdexcept>
#include <vector>

#include "qsteer/metrology/assemblage.h"
#include "qsteer/qmath/matrix.h"

namespace qsteer {

/// Raised when an outcome with vanishing probability has a nonzero slope.
class DivergentFisherInformation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Symmetric logarithmic derivative in the eigenbasis of rho, restricted to
/// eigenvalue pairs with lambda_k + lambda_l > tol::kSldSupport.
HermitianObservable sld(const DensityMatrix &rho, const ComplexMatrix &drho);

/// Tr[L^2 rho].
double qfi(const DensityMatrix &rho, const ComplexMatrix &drho);
double qfi(const LocalState &s);
double qfi(const PhaseFamily &family, double theta);

/// Tr[H^2 rho] - Tr[H rho]^2.
double variance(const DensityMatrix &rho, const HermitianObservable &h);

struct OutcomeDistribution {
    std::vector<double> p;
    std::vector<double> dp;
};

using ProbabilityCurve = std::function<OutcomeDistribution(double)>;

/// sum_b (dp_b)^2 / p_b. Outcomes with p_b < tol::kDivergentProbability are
/// skipped when their slope is below tol::kDivergentSlope and raise
/// DivergentFisherInformation otherwise.
double classical_fi(const OutcomeDistribution &dist);
double classical_fi(const ProbabilityCurve &curve, double theta0);

/// Outcome distribution of a projective measurement of `observable` on a
/// state with known derivative, one entry per eigenvalue (descending).
OutcomeDistribution measurement_distribution(const LocalState &s, const HermitianObservable &observable);
ProbabilityCurve measurement_curve(const PhaseFamily &family, const HermitianObservable &observable);

}  // namespace qsteer

#endif

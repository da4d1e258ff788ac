// Copyright 2026 The jwmsim Authors
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

#ifndef JWM_PREDICTABILITY_H
#define JWM_PREDICTABILITY_H

#include <span>
#include <vector>

#include "jwm/measurement.h"

namespace jwm {

/// (P(q'|hit) - P(q'|miss)) / (P(q'|hit) + P(q'|miss)) from the pointer
/// densities, with a flat prior P(x = x') = 1/2. Lies in [-1, 1].
double predictability_exact(double q_reading, const PointerConfig &cfg);

/// gamma q' / sigma^2.
double predictability_weak(double q_reading, const PointerConfig &cfg);

/// The retrodiction written three ways: relative posterior gain, Bayes
/// quotient, and density contrast. They are algebraically identical.
struct PredictabilityForms {
    double conditional;
    double bayes;
    double ratio;
};

PredictabilityForms predictability_forms(double q_reading, const PointerConfig &cfg);

/// 1/2 \int |P_q'| (P(q'|hit) + P(q'|miss)) dq'. Throws QuadratureDivergence
/// if the result leaves [0, 1].
double average_predictability(const PointerConfig &cfg);

/// sqrt(1 - p^2). Throws DomainError for |p| > 1.
double visibility_bound(double p);

struct PredictabilityCurve {
    std::vector<double> q_values;
    std::vector<double> p_values;
    PointerConfig cfg;
};

PredictabilityCurve predictability_curve(const PointerConfig &cfg, std::span<const double> q_values);

}  // namespace jwm

#endif

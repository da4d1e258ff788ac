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

#include "jwm/predictability.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "jwm/errors.h"

namespace jwm {

namespace {

constexpr double kPrior = 0.5;

double log_density(double u, double sigma) {
    return -u * u / (sigma * sigma) - 0.5 * std::log(kPi * sigma * sigma);
}

}  // namespace

double predictability_exact(double q_reading, const PointerConfig &cfg) {
    cfg.validate();
    // Rescale both densities by the larger one so tails far from the pointer
    // do not underflow to 0/0.
    const double lh = log_density(q_reading - 0.5 * cfg.gamma, cfg.sigma);
    const double lm = log_density(q_reading + 0.5 * cfg.gamma, cfg.sigma);
    const double top = std::max(lh, lm);
    const double hit = std::exp(lh - top);
    const double miss = std::exp(lm - top);
    return (hit - miss) / (hit + miss);
}

double predictability_weak(double q_reading, const PointerConfig &cfg) {
    cfg.validate();
    return cfg.gamma * q_reading / (cfg.sigma * cfg.sigma);
}

PredictabilityForms predictability_forms(double q_reading, const PointerConfig &cfg) {
    cfg.validate();
    const double hit = density_hit(cfg, q_reading);
    const double miss = density_miss(cfg, q_reading);
    const double evidence = hit * kPrior + miss * (1.0 - kPrior);
    const double posterior = hit * kPrior / evidence;
    return {
        (posterior - kPrior) / kPrior,
        hit / evidence - 1.0,
        (hit - miss) / (hit + miss),
    };
}

double average_predictability(const PointerConfig &cfg) {
    cfg.validate();
    if (cfg.gamma == 0.0) {
        return 0.0;
    }
    // The integrand is even in q', so integrate [0, L] with composite Simpson.
    const double reach = 8.0 * cfg.sigma + 0.5 * cfg.gamma;
    constexpr int kIntervals = 8192;
    const double h = reach / kIntervals;
    double sum = 0.0;
    for (int i = 0; i <= kIntervals; ++i) {
        const double q = h * i;
        const double f = std::abs(predictability_exact(q, cfg)) * (density_hit(cfg, q) + density_miss(cfg, q));
        const double w = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * f;
    }
    const double avg = sum * h / 3.0;
    if (!std::isfinite(avg) || avg < 0.0 || avg > 1.0 + 1e-9) {
        fail(ErrorCode::QuadratureDivergence, fmt::format("average predictability evaluated to {}", avg));
    }
    return std::min(avg, 1.0);
}

double visibility_bound(double p) {
    if (!(std::abs(p) <= 1.0)) {
        fail(ErrorCode::DomainError, fmt::format("predictability {} outside [-1, 1]", p));
    }
    return std::sqrt(1.0 - p * p);
}

PredictabilityCurve predictability_curve(const PointerConfig &cfg, std::span<const double> q_values) {
    PredictabilityCurve out{{q_values.begin(), q_values.end()}, {}, cfg};
    out.p_values.reserve(q_values.size());
    for (double q : q_values) {
        out.p_values.push_back(predictability_exact(q, cfg));
    }
    return out;
}

}  // namespace jwm

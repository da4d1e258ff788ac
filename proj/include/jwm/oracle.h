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

#ifndef JWM_ORACLE_H
#define JWM_ORACLE_H

#include <cstdint>
#include <string>
#include <vector>

#include "jwm/measurement.h"
#include "jwm/numerics.h"

namespace jwm::oracle {

/// One verifier outcome. `tolerance` is always absolute; checks whose bound
/// is relative carry "_rel" in the name and scale it by |expected| (or by the
/// field peak for "_peak" checks) before storing it.
struct CheckResult {
    std::string name;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t runtime_ms = 0;
    // Not serialised: reason a check could not run.
    std::string detail;
};

struct OracleConfig {
    std::uint64_t seed = 20260415;
    double gamma = 0.2;
    double sigma = 1.0;
    double sigma_x = 0.2;
    double sigma_p = 0.2;
    double x_probe = 0.0;
    double p_probe = 0.0;
    double q_reading = 2.0;
    double dirac_gamma_over_sigma = 0.05;
    double dirac_sigma = 0.1;
    int random_draws = 50;

    PointerConfig pointer() const {
        return {gamma, sigma};
    }
    ProbeConfig probe() const {
        return {x_probe, p_probe, sigma_x, sigma_p};
    }
};

/// Reads a JSON object whose keys are the hyphenated field names ("sigma-x",
/// "dirac-gamma-over-sigma", ...). Unknown keys and wrong types raise
/// ConfigError. Keys that belong to other CLI commands (grid-n, grid-span,
/// out) are accepted and ignored so one config file can serve every command.
OracleConfig load_config(const std::string &path);
OracleConfig parse_config(const std::string &json_text);

/// Row-name prefixes every run must cover; a missing one adds a failed
/// "coverage_<tag>" row.
const std::vector<std::string> &required_tags();

/// All checks, sorted by name. Check failures are recorded, never thrown.
std::vector<CheckResult> run_suite(const OracleConfig &config);
std::vector<CheckResult> run_suite(const std::string &config_path);

bool all_passed(const std::vector<CheckResult> &results);

/// JSON array of {name, observed, expected, tolerance, passed, runtime_ms}.
std::string report_json(const std::vector<CheckResult> &results);
void write_report(const std::vector<CheckResult> &results, const std::string &path);

/// <a|b> for two GaussianSpec states, in closed form.
cplx gaussian_overlap(const GaussianSpec &a, const GaussianSpec &b);

/// Re[<psi|Gamma><Gamma|chi><chi|psi>] for a Gaussian system state, in closed form.
double dirac_readout_analytic(const GaussianSpec &psi, const ProbeConfig &probe);

/// psi(x') psi~*(p') e^{-ip'x'} for a Gaussian, in closed form.
cplx dirac_gaussian(const GaussianSpec &psi, double x_probe, double p_probe);

/// Seeded smooth test states: centre in [-1, 1], width in [0.5, 2],
/// momentum in [-1, 1].
std::vector<GaussianSpec> random_gaussians(std::uint64_t seed, int count);

}  // namespace jwm::oracle

#endif

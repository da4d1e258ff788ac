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

#ifndef JWM_TOOLS_CLI_H
#define JWM_TOOLS_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace jwm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRegime = 2;
inline constexpr int kExitOracle = 3;

/// Resolved parameters of one invocation. Defaults reproduce the baseline setup
/// (gamma = 0.2, sigma = 1, sigma_x = sigma_p = 0.2, probe at the origin, q' = 2).
struct RunConfig {
    double gamma = 0.2;
    double sigma = 1.0;
    double sigma_x = 0.2;
    double sigma_p = 0.2;
    double x_probe = 0.0;
    double p_probe = 0.0;
    double q_reading = 2.0;
    int grid_n = 256;
    double grid_span = 8.0;
    std::string out = ".";

    // System state for dirac-scan.
    double psi_center = 0.0;
    double psi_width = 1.0;
    double psi_momentum = 0.0;

    // figure2
    std::vector<double> gamma_over_sigma;
    // variances
    int sweep_n = 10;
    // dirac-scan
    int lattice_n = 5;
    double lattice_span = 1.0;
    // verify
    std::uint64_t seed = 20260415;
    int random_draws = 50;
    double dirac_gamma_over_sigma = 0.05;
    double dirac_sigma = 0.1;
};

/// Default panel-(b) sweep: 0, 0.01, 0.02, then 0.05 to 10 in steps of 0.05.
std::vector<double> default_gamma_over_sigma();

/// Runs one command line. Returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace jwm::cli

#endif

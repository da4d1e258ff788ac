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

// Acceptance runner: one PASS/FAIL line per primary criterion, exit status 1
// if any fails. Tolerances are fixed here, not taken from a config.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "jwm/measurement.h"
#include "jwm/oracle.h"
#include "jwm/predictability.h"
#include "jwm/wigner.h"

using namespace jwm;

namespace {

const PointerConfig kBase{0.2, 1.0};
const ProbeConfig kBaseProbe{0.0, 0.0, 0.2, 0.2};
constexpr double kS2 = 0.04 * 0.04;  // (sigma_x sigma_p)^2 at the default widths

int failures = 0;

void report(const std::string &criterion, bool ok, const std::string &detail) {
    std::printf("%s  %-32s %s\n", ok ? "PASS" : "FAIL", criterion.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double peak_of(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

void baseline_predictability() {
    const double weak = predictability_weak(2.0, kBase);
    const double exact = predictability_exact(2.0, kBase);
    const bool ok = weak == 0.4 && std::abs(exact - std::tanh(0.4)) <= 1e-10 && std::abs(exact - 0.3799) < 5e-5;
    report("baseline_predictability", ok, fmt::format("weak {:.17g}, exact {:.12f} (tanh 0.4 = {:.12f})", weak, exact,
                                                  std::tanh(0.4)));
}

void baseline_rarity() {
    const WaveFunction1D phi = sample_gaussian({0.0, 1.0, 0.0}, Grid1D::default_grid());
    const double w = std::norm(phi.value_at(2.0));
    report("baseline_rarity", w >= 0.008 && w <= 0.012, fmt::format("|phi(2)|^2 = {:.6f}, window [0.008, 0.012]", w));
}

void check_closed_wigner() {
    const auto t0 = std::chrono::steady_clock::now();
    const Grid1D sys = system_grid_for(kBaseProbe);
    const JwmState s = jwm_state_weak(2.0, kBase, kBaseProbe, sys);
    // The state needs the fine grid; compare on every 4th node, a 512^2 lattice.
    const WignerField num = weyl_transform(s.state, s.weight).decimate(sys.size() / 512, sys.size() / 512);
    const WignerField closed = jwm_wigner_closed(2.0, kBase, kBaseProbe, num.x_grid, num.p_grid);
    const double diff = max_abs_diff(closed.values, num.values);
    const double bound = 5.0 * kS2 * closed.max();
    const double secs = seconds_since(t0);
    report("closed_wigner_vs_weyl", diff <= bound && secs < 5.0 && num.x_grid.size() == 512,
           fmt::format("max diff {:.3e} <= {:.3e} ({:.3f}% of peak), {}x{} grid in {:.2f} s", diff, bound,
                       100.0 * diff / closed.max(), num.x_grid.size(), num.p_grid.size(), secs));
}

void check_single_trial_variances() {
    const Grid1D xg = Grid1D::symmetric(8192, 60.0);
    const Grid1D pg = Grid1D::symmetric(8192, 60.0);
    const Marginals m = marginals_closed(2.0, kBase, kBaseProbe, xg, pg);
    const VariancePair v = single_trial_variances(2.0, kBase, kBaseProbe);
    const double ex = std::abs(raw_moment(m.px, xg, 2) / v.var_x - 1.0);
    const double ep = std::abs(raw_moment(m.pp, pg, 2) / v.var_p - 1.0);
    double min_product = 1e300;
    for (double sp : lattice_axis(10, 0.05, 0.5)) {
        for (double pred : lattice_axis(10, 0.0, 1.0)) {
            min_product = std::min(min_product, single_trial_variances_at(pred, {0, 0, 0.2, sp}).product());
        }
    }
    const double at_zero = single_trial_variances_at(0.0, kBaseProbe).product();
    const bool ok = ex <= 2 * kS2 && ep <= 2 * kS2 && min_product >= 0.25 - 1e-12 && std::abs(at_zero - 0.25) <= 1e-9;
    report("single_trial_variances", ok,
           fmt::format("rel err x {:.2e}, p {:.2e} (tol {:.2e}); sweep min product {:.6f}; P=0 product {:.15f}", ex,
                       ep, 2 * kS2, min_product, at_zero));
}

void check_averaged_variances() {
    const VariancePair v = averaged_variances(kBase, kBaseProbe);
    const double want = 2 * std::pow(0.2, 4);
    const double product = v.product();
    const bool ok = std::abs(v.var_x - want) <= 1e-6 && std::abs(v.var_p - want) <= 1e-6 &&
                    std::abs(product - 4 * std::pow(0.2, 8)) <= 1e-9 && product < 0.25;
    report("averaged_variances", ok,
           fmt::format("var_x {:.9f}, var_p {:.9f} (want {:.4f}), product {:.4e} (want 1.024e-05)", v.var_x, v.var_p,
                       want, product));
}

void check_dirac_readout() {
    const GaussianSpec spec{0.0, 1.0, 0.0};
    const auto axis = lattice_axis(5, -1.0, 1.0);
    auto worst = [&](double gamma) {
        double e = 0.0;
        for (double x : axis) {
            for (double p : axis) {
                const ProbeConfig probe{x, p, 0.1, 0.1};
                const WaveFunction1D psi = sample_gaussian(spec, system_grid_for(probe));
                const double shift = mean_pointer_shift(psi, {gamma, 1.0}, probe) / gamma;
                const double want = oracle::dirac_readout_analytic(spec, probe);
                e = std::max(e, std::abs(shift - want) / std::abs(want));
            }
        }
        return e;
    };
    const double e1 = worst(0.05);
    const double e2 = worst(0.025);
    report("dirac_readout", e1 <= 0.01 && e1 / e2 >= 3.5,
           fmt::format("max rel err {:.3e} at gamma/sigma 0.05, {:.3e} at 0.025, ratio {:.3f}", e1, e2, e1 / e2));
}

void check_average_predictability() {
    const double weak = average_predictability({0.05, 1.0});
    const double strong = average_predictability({10.0, 1.0});
    const double rel = std::abs(weak / (0.05 / std::sqrt(kPi)) - 1.0);
    report("average_predictability", rel <= 0.005 && strong > 0.999,
           fmt::format("weak rel err {:.2e} (tol 5e-3), strong {:.12f}", rel, strong));
}

void check_hermite_series() {
    double worst = 0.0;
    for (double t = 0.05; t <= 0.5 + 1e-12; t += 0.05) {
        for (double q = -4.0; q <= 4.0; q += 0.125) {
            const PointerConfig cfg{t, 1.0};
            worst = std::max(worst, std::abs(hermite_series_factor(cfg, q, 60) - hermite_series_closed(cfg, q)));
        }
    }
    const double first = hermite_series_factor(kBase, 2.0, 1);
    report("hermite_series", worst <= 1e-10 && std::abs(first - 0.4) <= 1e-15,
           fmt::format("max |series - closed| {:.2e}; n=1 term {:.17g}", worst, first));
}

void property_suites() {
    oracle::OracleConfig c;
    const auto rs = oracle::run_suite(c);
    auto row = [&](const std::string &name) {
        auto it = std::find_if(rs.begin(), rs.end(), [&](const oracle::CheckResult &r) { return r.name == name; });
        return it == rs.end() ? oracle::CheckResult{name} : *it;
    };
    const auto unit = row("unitarity_strong_coupling_abs");
    const auto pars = row("parseval_gaussian_abs");
    const auto ident = row("projector_identity_max_abs");
    const auto mx = row("marginals_marginal_x_peak");
    const auto mp = row("marginals_marginal_p_peak");

    // Closed-field marginals at widths where (sigma_x sigma_p)^2 = 1e-4.
    const ProbeConfig narrow{0.0, 0.0, 0.1, 0.1};
    const Grid1D sys = system_grid_for(narrow);
    const Grid1D pg = weyl_momentum_grid(sys);
    const WignerField w = jwm_wigner_closed(2.0, kBase, narrow, sys, pg);
    Marginals m = marginals_closed(2.0, kBase, narrow, sys, pg);
    const double weight = std::pow(pointer_amplitude(2.0, kBase.sigma), 2);
    for (double &v : m.px) v *= weight;
    for (double &v : m.pp) v *= weight;
    const double cx = max_abs_diff(w.marginal_x(), m.px) / peak_of(m.px);
    const double cp = max_abs_diff(w.marginal_p(), m.pp) / peak_of(m.pp);

    const Grid1D g = Grid1D::symmetric(256, 8.0);
    bool negativity = jwm_wigner_closed(0.0, kBase, kBaseProbe, g, g).min() >= 0.0;
    for (double q : {-2.0, -0.5, 0.5, 2.0}) {
        negativity = negativity && jwm_wigner_closed(q, kBase, kBaseProbe, g, g).min() < 0.0;
    }

    const bool ok = unit.passed && unit.tolerance == 1e-9 && pars.passed && pars.tolerance == 1e-9 && ident.passed &&
                    c.random_draws == 50 && ident.tolerance == 1e-8 && mx.passed && mp.passed && cx <= 1e-4 &&
                    cp <= 1e-4 && negativity;
    report("property_suites", ok,
           fmt::format("unitarity {:.1e}, parseval {:.1e}, identity x50 {:.1e}, weyl marginals {:.1e}/{:.1e} of peak, "
                       "closed marginals {:.1e}/{:.1e}, negativity iff P != 0: {}",
                       std::abs(unit.observed - 1.0), std::abs(pars.observed - pars.expected), ident.observed,
                       mx.observed / (mx.tolerance / 1e-4), mp.observed / (mp.tolerance / 1e-4), cx, cp,
                       negativity ? "yes" : "no"));
}

}  // namespace

int main() {
    baseline_predictability();
    baseline_rarity();
    check_closed_wigner();
    check_single_trial_variances();
    check_averaged_variances();
    check_dirac_readout();
    check_average_predictability();
    check_hermite_series();
    property_suites();
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}

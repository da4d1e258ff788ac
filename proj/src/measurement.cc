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

#include "jwm/measurement.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "jwm/errors.h"
#include "jwm/kernels.h"

namespace jwm {

void PointerConfig::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        fail(ErrorCode::InvalidWidth, fmt::format("pointer width sigma = {} must be positive", sigma));
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        fail(ErrorCode::DomainError, fmt::format("coupling gamma = {} must be non-negative", gamma));
    }
}

void ProbeConfig::validate() const {
    if (!(sigma_x > 0.0) || !(sigma_p > 0.0) || !std::isfinite(sigma_x) || !std::isfinite(sigma_p)) {
        fail(ErrorCode::InvalidProbe, fmt::format("projector widths sigma_x = {}, sigma_p = {} must be positive",
                                                  sigma_x, sigma_p));
    }
    if (!std::isfinite(x_probe) || !std::isfinite(p_probe)) {
        fail(ErrorCode::InvalidProbe, "probe location must be finite");
    }
}

GaussianSpec ProbeConfig::position_projector() const {
    return {x_probe, sigma_x, 0.0};
}

GaussianSpec ProbeConfig::momentum_projector() const {
    return momentum_projector_at(p_probe);
}

GaussianSpec ProbeConfig::momentum_projector_at(double p) const {
    return {0.0, 1.0 / sigma_p, p};
}

double pointer_amplitude(double u, double sigma) {
    return std::exp(-u * u / (2.0 * sigma * sigma)) / std::pow(kPi * sigma * sigma, 0.25);
}

double density_hit(const PointerConfig &cfg, double q) {
    const double a = pointer_amplitude(q - 0.5 * cfg.gamma, cfg.sigma);
    return a * a;
}

double density_miss(const PointerConfig &cfg, double q) {
    const double a = pointer_amplitude(q + 0.5 * cfg.gamma, cfg.sigma);
    return a * a;
}

PointerDensities pointer_densities(const PointerConfig &cfg, const Grid1D &q_grid) {
    cfg.validate();
    const double reach = 6.0 * cfg.sigma + 0.5 * cfg.gamma;
    if (q_grid.lo() > -reach || q_grid.hi() < reach) {
        fail(ErrorCode::GridTooNarrow, fmt::format("pointer grid [{}, {}] must cover +-{}", q_grid.lo(),
                                                   q_grid.hi(), reach));
    }
    PointerDensities out;
    out.hit.resize(q_grid.size());
    out.miss.resize(q_grid.size());
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        out.hit[i] = density_hit(cfg, q_grid[i]);
        out.miss[i] = density_miss(cfg, q_grid[i]);
    }
    return out;
}

Grid1D default_pointer_grid(const PointerConfig &cfg, std::size_t n) {
    cfg.validate();
    const double half = 8.0 * cfg.sigma + cfg.gamma;
    const double max_step = 0.25 * cfg.sigma;
    const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half / max_step)) + 1;
    return Grid1D::symmetric(std::max(n, std::bit_ceil(needed)), half);
}

Grid1D system_grid_for(const ProbeConfig &probe, double state_reach) {
    probe.validate();
    const double half = std::max({8.0 / probe.sigma_p, std::abs(probe.x_probe) + 8.0 * probe.sigma_x, state_reach});
    const double max_step = 0.22 * probe.sigma_x;
    const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half / max_step)) + 1;
    return Grid1D::symmetric(std::max<std::size_t>(256, std::bit_ceil(needed)), half);
}

JointAmplitude2D::JointAmplitude2D(Grid1D sys, Grid1D anc)
    : sys_grid(sys), anc_grid(anc), amp(sys.size() * anc.size()) {
}

double JointAmplitude2D::norm() const {
    const std::vector<double> wx = trapezoid_weights(sys_grid);
    const std::vector<double> wq = trapezoid_weights(anc_grid);
    std::vector<double> row_density(anc_grid.size());
    double total = 0.0;
    for (std::size_t i = 0; i < sys_grid.size(); ++i) {
        kernels::abs2(row(i), row_density);
        total += wx[i] * kernels::dot(wq, row_density);
    }
    return total;
}

JointAmplitude2D evolve_joint(const WaveFunction1D &psi, const PointerConfig &cfg, const ProbeConfig &probe,
                              const Grid1D &anc_grid) {
    cfg.validate();
    probe.validate();
    if (!psi.is_normalized()) {
        fail(ErrorCode::NotNormalized, fmt::format("system state has norm {}", psi.norm()));
    }
    const WaveFunction1D chi = sample_gaussian(probe.position_projector(), psi.grid);
    const WaveFunction1D phi0 = sample_gaussian({cfg.initial_center(), cfg.sigma, 0.0}, anc_grid);
    const WaveFunction1D phi1 = translate(phi0, cfg.gamma);

    // Pointer change on the chi branch: (S_gamma - I) phi_0.
    std::vector<cplx> kick(phi1.amp);
    kernels::caxpy(-1.0, phi0.amp, kick);

    const cplx chi_psi = inner(chi, psi);
    JointAmplitude2D joint(psi.grid, anc_grid);
    for (std::size_t i = 0; i < psi.grid.size(); ++i) {
        auto row = joint.row(i);
        kernels::caxpy(psi.amp[i], phi0.amp, row);
        kernels::caxpy(chi_psi * chi.amp[i], kick, row);
    }
    return joint;
}

WaveFunction1D project_system(const JointAmplitude2D &joint, const WaveFunction1D &sys_state) {
    if (!sys_state.grid.matches(joint.sys_grid)) {
        fail(ErrorCode::GridMismatch, "projector and joint amplitude use different system grids");
    }
    const std::vector<double> wx = trapezoid_weights(joint.sys_grid);
    WaveFunction1D out(joint.anc_grid);
    for (std::size_t i = 0; i < joint.sys_grid.size(); ++i) {
        kernels::caxpy(wx[i] * std::conj(sys_state.amp[i]), joint.row(i), out.amp);
    }
    return out;
}

double joint_probability(const JointAmplitude2D &joint, double q_reading, double p_reading,
                         const ProbeConfig &probe) {
    probe.validate();
    if (!joint.anc_grid.contains(q_reading)) {
        fail(ErrorCode::OutOfGrid, fmt::format("pointer reading {} outside the ancilla grid", q_reading));
    }
    const WaveFunction1D gamma_state = sample_gaussian(probe.momentum_projector_at(p_reading), joint.sys_grid);
    if (std::abs(p_reading) + 6.0 * probe.sigma_p > -gamma_state.grid.conjugate().lo()) {
        fail(ErrorCode::OutOfGrid, fmt::format("momentum reading {} beyond the grid's Nyquist limit", p_reading));
    }
    const WaveFunction1D pointer = project_system(joint, gamma_state);
    return std::norm(pointer.value_at(q_reading));
}

double reduced_state_fidelity(const JointAmplitude2D &joint, const WaveFunction1D &psi) {
    return project_system(joint, psi).norm();
}

double JwmState::expectation(const WaveFunction1D &psi) const {
    return weight * std::norm(inner(state, psi));
}

namespace {

WaveFunction1D superpose(const WaveFunction1D &base, cplx coeff, const WaveFunction1D &extra) {
    WaveFunction1D out(base);
    kernels::caxpy(coeff, extra.amp, out.amp);
    return out;
}

}  // namespace

JwmState jwm_state_exact(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &grid) {
    cfg.validate();
    probe.validate();
    if (!probe.closed_form_regime()) {
        fail(ErrorCode::InvalidProbe,
             fmt::format("sigma_x * sigma_p = {} must be below 0.25", probe.sigma_x * probe.sigma_p));
    }
    const WaveFunction1D chi = sample_gaussian(probe.position_projector(), grid);
    const WaveFunction1D gamma_state = sample_gaussian(probe.momentum_projector(), grid);

    // phi_0(q' - gamma) / phi_0(q') - 1 from the log-amplitudes of the two
    // pointer branches, which stays finite far in the tails.
    const double s2 = 2.0 * cfg.sigma * cfg.sigma;
    const double shifted = q_reading - 0.5 * cfg.gamma;
    const double unshifted = q_reading + 0.5 * cfg.gamma;
    const double ratio_minus_one = std::expm1((unshifted * unshifted - shifted * shifted) / s2);

    const double base = pointer_amplitude(unshifted, cfg.sigma);
    const cplx overlap = inner(chi, gamma_state);
    return {base * base, superpose(gamma_state, ratio_minus_one * overlap, chi), q_reading};
}

JwmState jwm_state_weak(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &grid,
                        OverlapMode mode) {
    cfg.validate();
    probe.validate();
    if (!cfg.is_weak()) {
        fail(ErrorCode::NotWeak, fmt::format("gamma/sigma = {} is not in the weak regime (< 0.3)", cfg.strength()));
    }
    const WaveFunction1D chi = sample_gaussian(probe.position_projector(), grid);
    const WaveFunction1D gamma_state = sample_gaussian(probe.momentum_projector(), grid);
    const double predictability = cfg.gamma * q_reading / (cfg.sigma * cfg.sigma);
    const cplx overlap = mode == OverlapMode::Quadrature
                             ? inner(chi, gamma_state)
                             : std::sqrt(2.0 * probe.sigma_x * probe.sigma_p) *
                                   std::polar(1.0, probe.p_probe * probe.x_probe);
    const double base = pointer_amplitude(q_reading, cfg.sigma);
    return {base * base, superpose(gamma_state, predictability * overlap, chi), q_reading};
}

double hermite_series_factor(const PointerConfig &cfg, double q_reading, int n_max) {
    cfg.validate();
    if (n_max < 1) {
        fail(ErrorCode::DomainError, fmt::format("n_max = {} must be at least 1", n_max));
    }
    const double t = cfg.gamma / cfg.sigma;
    const double x = q_reading / cfg.sigma;
    // term_n = t^n He_n(x) / n!, from He_{n+1} = x He_n - n He_{n-1}.
    double prev = 1.0;
    double cur = t * x;
    double sum = cur;
    for (int n = 1; n < n_max; ++n) {
        const double next = (t * x * cur - t * t * prev) / static_cast<double>(n + 1);
        prev = cur;
        cur = next;
        sum += cur;
    }
    return sum;
}

double hermite_series_closed(const PointerConfig &cfg, double q_reading) {
    cfg.validate();
    const double t = cfg.gamma / cfg.sigma;
    const double x = q_reading / cfg.sigma;
    return std::expm1(t * x - 0.5 * t * t);
}

}  // namespace jwm

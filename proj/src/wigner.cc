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

#include "jwm/wigner.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "jwm/errors.h"
#include "jwm/kernels.h"

namespace jwm {

WignerField::WignerField(Grid1D xg, Grid1D pg) : x_grid(xg), p_grid(pg), values(xg.size() * pg.size(), 0.0) {
}

double WignerField::min() const {
    return *std::min_element(values.begin(), values.end());
}

double WignerField::max() const {
    return *std::max_element(values.begin(), values.end());
}

double WignerField::integral() const {
    const std::vector<double> mx = marginal_x();
    return trapezoid(mx, x_grid.step());
}

std::vector<double> WignerField::marginal_x() const {
    const std::vector<double> wp = trapezoid_weights(p_grid);
    std::vector<double> out(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        out[i] = kernels::dot(wp, std::span<const double>(values.data() + i * p_grid.size(), p_grid.size()));
    }
    return out;
}

std::vector<double> WignerField::marginal_p() const {
    const std::vector<double> wx = trapezoid_weights(x_grid);
    std::vector<double> out(p_grid.size(), 0.0);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double *row = values.data() + i * p_grid.size();
        for (std::size_t j = 0; j < p_grid.size(); ++j) {
            out[j] += wx[i] * row[j];
        }
    }
    return out;
}

WignerField WignerField::decimate(std::size_t x_stride, std::size_t p_stride) const {
    if (x_stride == 0 || p_stride == 0 || x_grid.size() % x_stride != 0 || p_grid.size() % p_stride != 0) {
        fail(ErrorCode::InvalidGrid, fmt::format("strides ({}, {}) do not divide the field", x_stride, p_stride));
    }
    const std::size_t nx = x_grid.size() / x_stride;
    const std::size_t np = p_grid.size() / p_stride;
    Grid1D xg(nx, x_grid.lo(), x_grid[(nx - 1) * x_stride]);
    Grid1D pg(np, p_grid.lo(), p_grid[(np - 1) * p_stride]);
    WignerField out(xg, pg);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            out.at(i, j) = at(i * x_stride, j * p_stride);
        }
    }
    return out;
}

Grid1D weyl_momentum_grid(const Grid1D &x_grid) {
    const double n = static_cast<double>(x_grid.size());
    const double dp = kPi / (n * x_grid.step());
    const double lo = -kPi / (2.0 * x_grid.step());
    return Grid1D(x_grid.size(), lo, lo + (n - 1.0) * dp);
}

WignerField weyl_transform(const WaveFunction1D &state, double weight, double *max_imag) {
    const Grid1D &xg = state.grid;
    const std::size_t n = xg.size();
    WignerField out(xg, weyl_momentum_grid(xg));
    const double scale = weight * xg.step() / kPi;
    const auto &k = kernels::active();
    double worst_imag = 0.0;

#pragma omp parallel for schedule(static) reduction(max : worst_imag)
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t max_lag = std::min({i, n - 1 - i, n / 2 - 1});
        std::vector<cplx> lag(max_lag + 1);
        k.lag_products(state.amp.data(), i, max_lag, lag.data());
        std::vector<cplx> row(n, cplx(0.0));
        row[0] = lag[0];
        for (std::size_t l = 1; l <= max_lag; ++l) {
            row[l] = lag[l];
            row[n - l] = std::conj(lag[l]);
        }
        detail::fft_in_place(row, -1);
        double *dst = out.values.data() + i * n;
        for (std::size_t m = 0; m < n; ++m) {
            dst[m] = scale * row[m].real();
            worst_imag = std::max(worst_imag, std::abs(scale * row[m].imag()));
        }
    }
    if (max_imag != nullptr) {
        *max_imag = worst_imag;
    }
    return out;
}

namespace {

void require_closed_form(const ProbeConfig &probe) {
    probe.validate();
    if (!probe.closed_form_regime()) {
        fail(ErrorCode::RegimeViolation,
             fmt::format("sigma_x * sigma_p = {} (sigma_x = {}, sigma_p = {}) must be below 0.25",
                         probe.sigma_x * probe.sigma_p, probe.sigma_x, probe.sigma_p));
    }
}

double weak_predictability(double q_reading, const PointerConfig &cfg) {
    return cfg.gamma * q_reading / (cfg.sigma * cfg.sigma);
}

// The three pieces of pi * W_M / |phi^A(q')|^2 at phase-space point (x, p):
// momentum ridge of Gamma at (0, p'), position ridge of chi at (x', 0) per P^2,
// and their interference per P, centred midway with fringes in (x - x')(p - p').
struct ClosedTerms {
    double ridge_p;
    double ridge_x;
    double cross;
};

ClosedTerms closed_terms(double x, double p, const ProbeConfig &probe) {
    const double sx = probe.sigma_x;
    const double sp = probe.sigma_p;
    const double dx = x - probe.x_probe;
    const double dp = p - probe.p_probe;
    const double mx = x - 0.5 * probe.x_probe;
    const double mp = p - 0.5 * probe.p_probe;
    return {
        std::exp(-x * x * sp * sp - dp * dp / (sp * sp)),
        2.0 * sx * sp * std::exp(-dx * dx / (sx * sx) - p * p * sx * sx),
        4.0 * sx * sp * std::exp(-2.0 * mx * mx * sp * sp - 2.0 * mp * mp * sx * sx) * std::cos(2.0 * dx * dp),
    };
}

}  // namespace

WignerField jwm_wigner_closed(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe,
                              const Grid1D &x_grid, const Grid1D &p_grid) {
    cfg.validate();
    require_closed_form(probe);
    const double weight = std::pow(pointer_amplitude(q_reading, cfg.sigma), 2);
    const double pred = weak_predictability(q_reading, cfg);
    WignerField out(x_grid, p_grid);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        for (std::size_t j = 0; j < p_grid.size(); ++j) {
            const ClosedTerms t = closed_terms(x_grid[i], p_grid[j], probe);
            out.at(i, j) = weight * (t.ridge_p + pred * pred * t.ridge_x + pred * t.cross) / kPi;
        }
    }
    return out;
}

Marginals marginals_closed(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe,
                           const Grid1D &x_grid, const Grid1D &p_grid) {
    cfg.validate();
    require_closed_form(probe);
    const double sx = probe.sigma_x;
    const double sp = probe.sigma_p;
    const double pred = weak_predictability(q_reading, cfg);
    const double mix = std::sqrt(2.0 * sx * sp);

    // Gamma~ and chi~ are the momentum-space Gaussians seen from the other side.
    const GaussianSpec chi{0.0, sx, 0.0};
    const GaussianSpec gamma_x{0.0, 1.0 / sp, 0.0};
    const GaussianSpec gamma_p{0.0, sp, 0.0};
    const GaussianSpec chi_p{0.0, 1.0 / sx, 0.0};

    Marginals out{x_grid, std::vector<double>(x_grid.size()), p_grid, std::vector<double>(p_grid.size())};
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        const double c = chi(x - probe.x_probe).real();
        const double g = gamma_x(x).real();
        out.px[i] = g * g + mix * mix * pred * pred * c * c +
                    2.0 * pred * mix * c * g * std::cos(probe.p_probe * (x - probe.x_probe));
    }
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
        const double p = p_grid[j];
        const double g = gamma_p(p - probe.p_probe).real();
        const double c = chi_p(p).real();
        out.pp[j] = g * g + mix * mix * pred * pred * c * c +
                    2.0 * pred * mix * g * c * std::cos(probe.x_probe * (p - probe.p_probe));
    }
    return out;
}

VariancePair single_trial_variances_at(double pred, const ProbeConfig &probe) {
    require_closed_form(probe);
    const double sx = probe.sigma_x;
    const double sp = probe.sigma_p;
    return {
        1.0 / (2.0 * sp * sp) + pred * pred * sx * sx * sx * sp + 4.0 * pred * sx * sx * sx * sp,
        sp * sp / 2.0 + pred * pred * sp / sx + 4.0 * pred * sp * sp * sp * sx,
    };
}

VariancePair single_trial_variances(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe) {
    cfg.validate();
    return single_trial_variances_at(weak_predictability(q_reading, cfg), probe);
}

VariancePair averaged_variances(const PointerConfig &cfg, const ProbeConfig &probe) {
    cfg.validate();
    require_closed_form(probe);
    if (!(cfg.gamma > 0.0)) {
        fail(ErrorCode::DomainError, "averaged variances are normalised by gamma, which must be positive");
    }
    const Grid1D q_grid = Grid1D::symmetric(4096, 12.0 * cfg.sigma);
    std::vector<double> fx(q_grid.size());
    std::vector<double> fp(q_grid.size());
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        const double q = q_grid[i];
        const double w = std::pow(pointer_amplitude(q, cfg.sigma), 2);
        const VariancePair v = single_trial_variances(q, cfg, probe);
        fx[i] = q * v.var_x * w / cfg.gamma;
        fp[i] = q * v.var_p * w / cfg.gamma;
    }
    return {trapezoid(fx, q_grid.step()), trapezoid(fp, q_grid.step())};
}

VariancePair averaged_variances_closed(const ProbeConfig &probe) {
    require_closed_form(probe);
    const double sx = probe.sigma_x;
    const double sp = probe.sigma_p;
    return {2.0 * sx * sx * sx * sp, 2.0 * sp * sp * sp * sx};
}

cplx dirac_distribution(const WaveFunction1D &psi, double x_probe, double p_probe) {
    const double nyquist = kPi / psi.grid.step();
    if (std::abs(p_probe) >= nyquist) {
        fail(ErrorCode::OutOfGrid, fmt::format("p' = {} beyond the grid's momentum range +-{}", p_probe, nyquist));
    }
    const cplx at_x = psi.value_at(x_probe);
    const cplx at_p = momentum_amplitude(psi, p_probe);
    return at_x * std::conj(at_p) * std::polar(1.0, -p_probe * x_probe);
}

std::vector<double> lattice_axis(std::size_t n, double lo, double hi) {
    if (n == 0) {
        fail(ErrorCode::DomainError, "lattice needs at least one point");
    }
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = 0.5 * (lo + hi);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

DiracLattice dirac_lattice(const WaveFunction1D &psi, const std::vector<double> &x, const std::vector<double> &p) {
    DiracLattice out{x, p, std::vector<cplx>(x.size() * p.size())};
    std::vector<cplx> at_x(x.size());
    std::vector<cplx> at_p(p.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        at_x[i] = psi.value_at(x[i]);
    }
    const double nyquist = kPi / psi.grid.step();
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (std::abs(p[j]) >= nyquist) {
            fail(ErrorCode::OutOfGrid, fmt::format("p' = {} beyond the grid's momentum range", p[j]));
        }
        at_p[j] = std::conj(momentum_amplitude(psi, p[j]));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            out.values[i * p.size() + j] = at_x[i] * at_p[j] * std::polar(1.0, -p[j] * x[i]);
        }
    }
    return out;
}

double mean_pointer_shift(const WaveFunction1D &psi, const PointerConfig &cfg, const ProbeConfig &probe) {
    cfg.validate();
    probe.validate();
    if (cfg.strength() > 0.1) {
        fail(ErrorCode::NotWeak,
             fmt::format("gamma/sigma = {} exceeds 0.1 for the pointer-shift readout", cfg.strength()));
    }
    const Grid1D anc_grid = default_pointer_grid(cfg);
    const JointAmplitude2D joint = evolve_joint(psi, cfg, probe, anc_grid);
    const WaveFunction1D gamma_state = sample_gaussian(probe.momentum_projector(), psi.grid);
    const WaveFunction1D pointer = project_system(joint, gamma_state);
    std::vector<double> first(anc_grid.size());
    for (std::size_t j = 0; j < anc_grid.size(); ++j) {
        first[j] = (anc_grid[j] - cfg.initial_center()) * std::norm(pointer.amp[j]);
    }
    return trapezoid(first, anc_grid.step());
}

WignerField averaged_jwm_wigner(const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &x_grid,
                                const Grid1D &p_grid) {
    cfg.validate();
    require_closed_form(probe);
    // q'-moments of the three terms: weight * {1, P^2, P}.
    const Grid1D q_grid = Grid1D::symmetric(4096, 12.0 * cfg.sigma);
    std::vector<double> m_const(q_grid.size());
    std::vector<double> m_sq(q_grid.size());
    std::vector<double> m_lin(q_grid.size());
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        const double q = q_grid[i];
        const double w = std::pow(pointer_amplitude(q, cfg.sigma), 2);
        const double pred = weak_predictability(q, cfg);
        m_const[i] = q * w;
        m_sq[i] = q * w * pred * pred;
        m_lin[i] = q * w * pred;
    }
    const double a = trapezoid(m_const, q_grid.step());
    const double b = trapezoid(m_sq, q_grid.step());
    const double c = trapezoid(m_lin, q_grid.step());

    WignerField out(x_grid, p_grid);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        for (std::size_t j = 0; j < p_grid.size(); ++j) {
            const ClosedTerms t = closed_terms(x_grid[i], p_grid[j], probe);
            out.at(i, j) = (a * t.ridge_p + b * t.ridge_x + c * t.cross) / kPi;
        }
    }
    return out;
}

}  // namespace jwm

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

#ifndef JWM_MEASUREMENT_H
#define JWM_MEASUREMENT_H

#include <cstddef>
#include <span>
#include <vector>

#include "jwm/numerics.h"

// Von Neumann model of the joint weak measurement: a Gaussian pointer is
// displaced by gamma when the system is found in the probe state chi(x'),
// then the system is projected onto Gamma(p').

namespace jwm {

/// Ancilla width sigma and coupling gamma. The pointer starts centred at -gamma/2.
struct PointerConfig {
    double gamma = 0.2;
    double sigma = 1.0;

    double initial_center() const {
        return -0.5 * gamma;
    }
    double strength() const {
        return gamma / sigma;
    }
    bool is_weak() const {
        return strength() < 0.3;
    }
    /// gamma >= 0 and sigma > 0, both finite. Throws InvalidWidth / DomainError.
    void validate() const;
};

/// Probe location (x', p') and the widths of the position projector chi and
/// the momentum projector Gamma.
struct ProbeConfig {
    double x_probe = 0.0;
    double p_probe = 0.0;
    double sigma_x = 0.2;
    double sigma_p = 0.2;

    /// Throws InvalidProbe for non-positive or non-finite widths.
    void validate() const;
    /// sigma_x * sigma_p < 0.25, where the narrow-projector closed forms apply.
    bool closed_form_regime() const {
        return sigma_x * sigma_p < 0.25;
    }
    /// chi(x - x'), a position Gaussian of width sigma_x.
    GaussianSpec position_projector() const;
    /// Gamma(p - p') written in position space: width 1/sigma_p, momentum p'.
    GaussianSpec momentum_projector() const;
    /// Like momentum_projector() but centred on momentum p.
    GaussianSpec momentum_projector_at(double p) const;
};

/// phi^A(u) = e^{-u^2/2 sigma^2} / (pi sigma^2)^{1/4}.
double pointer_amplitude(double u, double sigma);

/// P(q | x = x') = |phi^A(q - gamma/2)|^2.
double density_hit(const PointerConfig &cfg, double q);
/// P(q | x != x') = |phi^A(q + gamma/2)|^2.
double density_miss(const PointerConfig &cfg, double q);

struct PointerDensities {
    std::vector<double> hit;
    std::vector<double> miss;
};

/// Both conditional pointer densities sampled on q_grid. Throws GridTooNarrow
/// unless the grid covers 6 sigma around both +-gamma/2.
PointerDensities pointer_densities(const PointerConfig &cfg, const Grid1D &q_grid);

/// A pointer grid that holds both displaced Gaussians with 8 sigma to spare.
Grid1D default_pointer_grid(const PointerConfig &cfg, std::size_t n = 256);

/// System (x) by ancilla (q) amplitude, stored with the system index major.
struct JointAmplitude2D {
    Grid1D sys_grid;
    Grid1D anc_grid;
    std::vector<cplx> amp;

    JointAmplitude2D(Grid1D sys, Grid1D anc);

    cplx &at(std::size_t i, std::size_t j) {
        return amp[i * anc_grid.size() + j];
    }
    cplx at(std::size_t i, std::size_t j) const {
        return amp[i * anc_grid.size() + j];
    }
    std::span<const cplx> row(std::size_t i) const {
        return {amp.data() + i * anc_grid.size(), anc_grid.size()};
    }
    std::span<cplx> row(std::size_t i) {
        return {amp.data() + i * anc_grid.size(), anc_grid.size()};
    }

    double norm() const;
};

/// U |psi>|phi> with U = exp(-i gamma |chi><chi| (x) alpha), applied exactly
/// through I (x) I + |chi><chi| (x) (S_gamma - I); S_gamma translates the
/// pointer by +gamma. Throws NotNormalized if psi is not normalised.
JointAmplitude2D evolve_joint(const WaveFunction1D &psi, const PointerConfig &cfg, const ProbeConfig &probe,
                              const Grid1D &anc_grid);

/// <sys_state|_S applied to the joint amplitude: the ancilla amplitude left
/// after projecting the system onto sys_state.
WaveFunction1D project_system(const JointAmplitude2D &joint, const WaveFunction1D &sys_state);

/// |<q'|<Gamma(p')| U |psi>|phi>|^2 for the Gamma of `probe` recentred at p_reading.
double joint_probability(const JointAmplitude2D &joint, double q_reading, double p_reading,
                         const ProbeConfig &probe);

/// <psi| Tr_A(|Psi><Psi|) |psi>.
double reduced_state_fidelity(const JointAmplitude2D &joint, const WaveFunction1D &psi);

/// The measurement operator M = weight |state><state| for one pointer reading.
struct JwmState {
    double weight;
    WaveFunction1D state;
    double q_reading;

    /// <psi|M|psi>.
    double expectation(const WaveFunction1D &psi) const;
};

/// Exact projected state. With phi_0 the initial pointer,
/// |state> = |Gamma> + (phi_0(q'-gamma)/phi_0(q') - 1) <chi|Gamma> |chi>
/// and weight = |phi_0(q')|^2 = |phi^A(q' + gamma/2)|^2.
JwmState jwm_state_exact(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &grid);

enum class OverlapMode {
    /// <chi|Gamma> by quadrature on the grid.
    Quadrature,
    /// <chi|Gamma> replaced by e^{ip'x'} sqrt(2 sigma_x sigma_p).
    NarrowLimit,
};

/// First-order state |Gamma> + P <chi|Gamma> |chi>, P = gamma q'/sigma^2,
/// weighted by |phi^A(q')|^2. Throws NotWeak when gamma/sigma >= 0.3.
JwmState jwm_state_weak(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &grid,
                        OverlapMode mode = OverlapMode::Quadrature);

/// sum_{n=1}^{n_max} (gamma/sigma)^n He_n(q'/sigma) / n!, probabilists' Hermite.
double hermite_series_factor(const PointerConfig &cfg, double q_reading, int n_max);

/// Generating-function limit e^{gamma q'/sigma^2 - gamma^2/2sigma^2} - 1.
double hermite_series_closed(const PointerConfig &cfg, double q_reading);

/// A system grid wide enough for both projectors of `probe` and for a state
/// extending to |x| <= state_reach, fine enough to resolve sigma_x.
Grid1D system_grid_for(const ProbeConfig &probe, double state_reach = 8.0);

}  // namespace jwm

#endif

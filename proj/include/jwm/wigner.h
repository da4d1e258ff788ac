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

#ifndef JWM_WIGNER_H
#define JWM_WIGNER_H

#include <cstddef>
#include <vector>

#include "jwm/measurement.h"
#include "jwm/numerics.h"

namespace jwm {

/// Real phase-space field over an (x, p) grid, row-major over x.
struct WignerField {
    Grid1D x_grid;
    Grid1D p_grid;
    std::vector<double> values;

    WignerField(Grid1D xg, Grid1D pg);

    double &at(std::size_t i, std::size_t j) {
        return values[i * p_grid.size() + j];
    }
    double at(std::size_t i, std::size_t j) const {
        return values[i * p_grid.size() + j];
    }

    double min() const;
    double max() const;
    /// Trapezoid double integral.
    double integral() const;
    /// \int W dp on x_grid.
    std::vector<double> marginal_x() const;
    /// \int W dx on p_grid.
    std::vector<double> marginal_p() const;
    /// Every x_stride-th row and p_stride-th column.
    WignerField decimate(std::size_t x_stride, std::size_t p_stride) const;
};

/// Momentum grid produced by weyl_transform for states on x_grid: n points
/// with spacing pi/(n step), starting at -pi/(2 step).
Grid1D weyl_momentum_grid(const Grid1D &x_grid);

/// Wigner function of weight |state><state|:
/// W(x, p) = weight/pi \int dy state(x + y) conj(state(x - y)) e^{-2ipy},
/// evaluated row by row with an FFT over the lag y. If max_imag is non-null
/// it receives the largest imaginary residue seen.
WignerField weyl_transform(const WaveFunction1D &state, double weight, double *max_imag = nullptr);

/// Closed-form JWM Wigner function for narrow projectors, weighted by
/// |phi^A(q')|^2. Away from the origin the momentum ridge stays at (0, p'),
/// the position ridge at (x', 0), and the interference term sits midway with
/// fringes cos(2 (x - x')(p - p')).
/// Throws RegimeViolation when sigma_x sigma_p >= 0.25.
WignerField jwm_wigner_closed(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe,
                              const Grid1D &x_grid, const Grid1D &p_grid);

/// Position and momentum marginals of the narrow-projector JWM state, divided
/// by |phi^A(q')|^2.
struct Marginals {
    Grid1D x_grid;
    std::vector<double> px;
    Grid1D p_grid;
    std::vector<double> pp;
};

Marginals marginals_closed(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe,
                           const Grid1D &x_grid, const Grid1D &p_grid);

struct VariancePair {
    double var_x = 0.0;
    double var_p = 0.0;

    double product() const {
        return var_x * var_p;
    }
};

/// Single-trial variances for predictability P:
///   var_x = 1/(2 sp^2) + P^2 sx^3 sp + 4 P sx^3 sp
///   var_p = sp^2/2 + P^2 sp/sx + 4 P sp^3 sx
VariancePair single_trial_variances_at(double predictability, const ProbeConfig &probe);

/// Same, with P = gamma q'/sigma^2.
VariancePair single_trial_variances(double q_reading, const PointerConfig &cfg, const ProbeConfig &probe);

/// \int dq' q' var(q') |phi^A(q')|^2 / gamma, by quadrature over the pointer reading.
VariancePair averaged_variances(const PointerConfig &cfg, const ProbeConfig &probe);

/// (2 sx^3 sp, 2 sp^3 sx).
VariancePair averaged_variances_closed(const ProbeConfig &probe);

/// \int D dx' dp' for a normalised state; D as returned by dirac_distribution.
inline const double kDiracTotal = 2.5066282746310002;  // sqrt(2 pi)

/// D(x', p') = psi(x') conj(psi~(p')) e^{-ip'x'}. Throws OutOfGrid.
cplx dirac_distribution(const WaveFunction1D &psi, double x_probe, double p_probe);

struct DiracLattice {
    std::vector<double> x;
    std::vector<double> p;
    std::vector<cplx> values;  // row-major over x

    cplx at(std::size_t i, std::size_t j) const {
        return values[i * p.size() + j];
    }
};

DiracLattice dirac_lattice(const WaveFunction1D &psi, const std::vector<double> &x, const std::vector<double> &p);

/// Evenly spaced lattice axis of n points on [lo, hi] (n = 1 gives the midpoint).
std::vector<double> lattice_axis(std::size_t n, double lo, double hi);

/// Mean pointer displacement from the full system-ancilla simulation,
/// \int (q' + gamma/2) <M_{q'}> dq', i.e. measured from the initial pointer
/// position and not divided by the probability of the Gamma outcome.
/// Throws NotWeak when gamma/sigma > 0.1.
double mean_pointer_shift(const WaveFunction1D &psi, const PointerConfig &cfg, const ProbeConfig &probe);

/// \int dq' q' W_M(x, p) over pointer readings (closed-form W_M).
WignerField averaged_jwm_wigner(const PointerConfig &cfg, const ProbeConfig &probe, const Grid1D &x_grid,
                                const Grid1D &p_grid);

}  // namespace jwm

#endif

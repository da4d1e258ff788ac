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

#ifndef JWM_NUMERICS_H
#define JWM_NUMERICS_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace jwm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Uniform sampling lo, lo + step, ..., hi with n points. Units have hbar = 1.
class Grid1D {
   public:
    /// Throws InvalidGrid unless n >= 8 is a power of two and lo < hi.
    Grid1D(std::size_t n, double lo, double hi);

    /// n points on [-half_span, half_span].
    static Grid1D symmetric(std::size_t n, double half_span);

    /// 2048 points on [-12, 12].
    static Grid1D default_grid();

    std::size_t size() const {
        return n_;
    }
    double lo() const {
        return lo_;
    }
    double hi() const {
        return hi_;
    }
    double step() const {
        return step_;
    }
    double operator[](std::size_t i) const {
        return lo_ + static_cast<double>(i) * step_;
    }
    bool contains(double u) const {
        return u >= lo_ && u <= hi_;
    }

    /// FFT-conjugate grid: n points from -pi/step with spacing 2*pi/(n*step).
    Grid1D conjugate() const;

    std::vector<double> points() const;

    /// Same n and endpoints to a relative 1e-12.
    bool matches(const Grid1D &other) const;

   private:
    std::size_t n_;
    double lo_;
    double hi_;
    double step_;
};

struct WaveFunction1D {
    Grid1D grid;
    std::vector<cplx> amp;

    WaveFunction1D(Grid1D g, std::vector<cplx> a);
    explicit WaveFunction1D(Grid1D g) : WaveFunction1D(g, std::vector<cplx>(g.size())) {
    }

    /// Trapezoid integral of |amp|^2.
    double norm() const;
    bool is_normalized(double eps = 1e-9) const;

    /// Band-limited (trigonometric) interpolation at an arbitrary point
    /// inside the grid. Throws OutOfGrid otherwise.
    cplx value_at(double u) const;

    std::vector<double> density() const;
};

/// e^{-(u - center)^2 / (2 width^2)} e^{i phase_momentum u}, normalised.
struct GaussianSpec {
    double center = 0.0;
    double width = 1.0;
    double phase_momentum = 0.0;

    cplx operator()(double u) const;
    /// Continuum Fourier transform at momentum p (same convention as fourier()).
    cplx momentum_amplitude(double p) const;
};

/// Samples a GaussianSpec. Throws InvalidWidth for width <= 0, GridTooNarrow
/// when the grid does not extend 6 widths either side of the centre, and
/// UnderResolved when the step exceeds half a width.
WaveFunction1D sample_gaussian(const GaussianSpec &spec, const Grid1D &grid);

/// psi~(p) = (2 pi)^{-1/2} \int psi(x) e^{-ipx} dx on grid.conjugate().
WaveFunction1D fourier(const WaveFunction1D &psi);

/// Inverse of fourier(); `target` is the position grid to land on and must
/// have `target.conjugate()` equal to the grid of psi_p.
WaveFunction1D inverse_fourier(const WaveFunction1D &psi_p, const Grid1D &target);

/// Direct quadrature of the continuum transform at a single momentum.
cplx momentum_amplitude(const WaveFunction1D &psi, double p);

/// psi(u - shift), via a phase ramp in momentum space. The shifted function
/// must still decay inside the grid for the result to be meaningful.
WaveFunction1D translate(const WaveFunction1D &psi, double shift);

/// \int conj(a) b du by trapezoid rule. Throws GridMismatch.
cplx inner(const WaveFunction1D &a, const WaveFunction1D &b);

/// Trapezoid rule with uniform step.
double trapezoid(std::span<const double> f, double step);

/// Trapezoid weights (step, with halved endpoints).
std::vector<double> trapezoid_weights(const Grid1D &grid);

/// \int u^k rho du / \int rho du. Throws ZeroMass for non-positive mass.
double moments(std::span<const double> density, const Grid1D &grid, int k);

/// \int u^k rho du without normalising by the mass.
double raw_moment(std::span<const double> density, const Grid1D &grid, int k);

namespace detail {
/// Unnormalised in-place DFT; sign is -1 (forward) or +1 (backward).
void fft_in_place(std::vector<cplx> &data, int sign);
}  // namespace detail

}  // namespace jwm

#endif

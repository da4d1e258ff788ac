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

#include "jwm/numerics.h"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include <fmt/format.h>

#include "jwm/errors.h"
#include "jwm/kernels.h"

namespace jwm {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
class FftPlans {
   public:
    static FftPlans &instance() {
        static FftPlans plans;
        return plans;
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) {
            return it->second;
        }
        auto *buf = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE);
        fftw_free(buf);
        plans_.emplace(key, plan);
        return plan;
    }

    ~FftPlans() {
        for (auto &[key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

   private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

struct FftwDeleter {
    void operator()(fftw_complex *p) const {
        fftw_free(p);
    }
};

}  // namespace

void detail::fft_in_place(std::vector<cplx> &data, int sign) {
    const std::size_t n = data.size();
    fftw_plan plan = FftPlans::instance().get(n, sign);
    std::unique_ptr<fftw_complex[], FftwDeleter> buf(fftw_alloc_complex(n));
    std::copy(data.begin(), data.end(), reinterpret_cast<cplx *>(buf.get()));
    fftw_execute_dft(plan, buf.get(), buf.get());
    std::copy_n(reinterpret_cast<cplx *>(buf.get()), n, data.begin());
}

Grid1D::Grid1D(std::size_t n, double lo, double hi) : n_(n), lo_(lo), hi_(hi) {
    if (n < 8 || !std::has_single_bit(n)) {
        fail(ErrorCode::InvalidGrid, fmt::format("grid size {} must be a power of two >= 8", n));
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        fail(ErrorCode::InvalidGrid, fmt::format("grid bounds [{}, {}] are not ordered", lo, hi));
    }
    step_ = (hi - lo) / static_cast<double>(n - 1);
}

Grid1D Grid1D::symmetric(std::size_t n, double half_span) {
    return Grid1D(n, -half_span, half_span);
}

Grid1D Grid1D::default_grid() {
    return symmetric(2048, 12.0);
}

Grid1D Grid1D::conjugate() const {
    const double dp = 2.0 * kPi / (static_cast<double>(n_) * step_);
    const double lo = -kPi / step_;
    return Grid1D(n_, lo, lo + static_cast<double>(n_ - 1) * dp);
}

std::vector<double> Grid1D::points() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = (*this)[i];
    }
    return out;
}

bool Grid1D::matches(const Grid1D &other) const {
    const double scale = std::max(std::abs(hi_ - lo_), std::abs(other.hi_ - other.lo_));
    return n_ == other.n_ && std::abs(lo_ - other.lo_) <= 1e-12 * scale &&
           std::abs(hi_ - other.hi_) <= 1e-12 * scale;
}

WaveFunction1D::WaveFunction1D(Grid1D g, std::vector<cplx> a) : grid(g), amp(std::move(a)) {
    if (amp.size() != grid.size()) {
        fail(ErrorCode::GridMismatch, fmt::format("{} amplitudes for a grid of {}", amp.size(), grid.size()));
    }
}

double WaveFunction1D::norm() const {
    const double h = grid.step();
    double s = kernels::norm2(amp);
    s -= 0.5 * (std::norm(amp.front()) + std::norm(amp.back()));
    return s * h;
}

bool WaveFunction1D::is_normalized(double eps) const {
    return std::abs(norm() - 1.0) <= eps;
}

cplx WaveFunction1D::value_at(double u) const {
    if (!grid.contains(u)) {
        fail(ErrorCode::OutOfGrid, fmt::format("u = {} outside [{}, {}]", u, grid.lo(), grid.hi()));
    }
    const double h = grid.step();
    const double rel = (u - grid.lo()) / h;
    const double nearest = std::round(rel);
    if (std::abs(rel - nearest) < 1e-12) {
        return amp[static_cast<std::size_t>(nearest)];
    }
    WaveFunction1D spectrum = fourier(*this);
    const Grid1D &pg = spectrum.grid;
    cplx acc = 0.0;
    for (std::size_t m = 0; m < pg.size(); ++m) {
        acc += spectrum.amp[m] * std::polar(1.0, pg[m] * u);
    }
    return acc * pg.step() / std::sqrt(2.0 * kPi);
}

std::vector<double> WaveFunction1D::density() const {
    std::vector<double> out(amp.size());
    kernels::abs2(amp, out);
    return out;
}

cplx GaussianSpec::operator()(double u) const {
    const double d = (u - center) / width;
    const double norm = std::pow(kPi * width * width, -0.25);
    return norm * std::exp(-0.5 * d * d) * std::polar(1.0, phase_momentum * u);
}

cplx GaussianSpec::momentum_amplitude(double p) const {
    const double dk = p - phase_momentum;
    const double norm = std::pow(width * width / kPi, 0.25);
    return norm * std::exp(-0.5 * dk * dk * width * width) * std::polar(1.0, -dk * center);
}

WaveFunction1D sample_gaussian(const GaussianSpec &spec, const Grid1D &grid) {
    if (!(spec.width > 0.0) || !std::isfinite(spec.width)) {
        fail(ErrorCode::InvalidWidth, fmt::format("Gaussian width {} must be positive", spec.width));
    }
    const double reach = 6.0 * spec.width;
    if (spec.center - reach < grid.lo() || spec.center + reach > grid.hi()) {
        fail(ErrorCode::GridTooNarrow,
             fmt::format("grid [{}, {}] clips Gaussian centred at {} with width {}", grid.lo(), grid.hi(),
                         spec.center, spec.width));
    }
    if (grid.step() > 0.5 * spec.width) {
        fail(ErrorCode::UnderResolved,
             fmt::format("grid step {} too coarse for Gaussian width {}", grid.step(), spec.width));
    }
    WaveFunction1D out(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.amp[i] = spec(grid[i]);
    }
    return out;
}

WaveFunction1D fourier(const WaveFunction1D &psi) {
    const Grid1D &g = psi.grid;
    const Grid1D pg = g.conjugate();
    const std::size_t n = g.size();
    std::vector<cplx> data(psi.amp);
    for (std::size_t j = 1; j < n; j += 2) {
        data[j] = -data[j];
    }
    detail::fft_in_place(data, FFTW_FORWARD);
    const double scale = g.step() / std::sqrt(2.0 * kPi);
    for (std::size_t m = 0; m < n; ++m) {
        data[m] *= scale * std::polar(1.0, -pg[m] * g.lo());
    }
    return WaveFunction1D(pg, std::move(data));
}

WaveFunction1D inverse_fourier(const WaveFunction1D &psi_p, const Grid1D &target) {
    const Grid1D pg = target.conjugate();
    if (!pg.matches(psi_p.grid)) {
        fail(ErrorCode::GridMismatch, "momentum grid is not conjugate to the target grid");
    }
    const std::size_t n = target.size();
    std::vector<cplx> data(n);
    for (std::size_t m = 0; m < n; ++m) {
        data[m] = psi_p.amp[m] * std::polar(1.0, pg[m] * target.lo());
    }
    detail::fft_in_place(data, FFTW_BACKWARD);
    const double scale = pg.step() / std::sqrt(2.0 * kPi);
    for (std::size_t j = 0; j < n; ++j) {
        data[j] *= (j & 1) ? -scale : scale;
    }
    return WaveFunction1D(target, std::move(data));
}

cplx momentum_amplitude(const WaveFunction1D &psi, double p) {
    const Grid1D &g = psi.grid;
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double w = (j == 0 || j + 1 == g.size()) ? 0.5 : 1.0;
        acc += w * psi.amp[j] * std::polar(1.0, -p * g[j]);
    }
    return acc * g.step() / std::sqrt(2.0 * kPi);
}

WaveFunction1D translate(const WaveFunction1D &psi, double shift) {
    WaveFunction1D spectrum = fourier(psi);
    for (std::size_t m = 0; m < spectrum.amp.size(); ++m) {
        spectrum.amp[m] *= std::polar(1.0, -spectrum.grid[m] * shift);
    }
    return inverse_fourier(spectrum, psi.grid);
}

cplx inner(const WaveFunction1D &a, const WaveFunction1D &b) {
    if (!a.grid.matches(b.grid)) {
        fail(ErrorCode::GridMismatch, "inner product of functions on different grids");
    }
    cplx s = kernels::cdot(a.amp, b.amp);
    s -= 0.5 * (std::conj(a.amp.front()) * b.amp.front() + std::conj(a.amp.back()) * b.amp.back());
    return s * a.grid.step();
}

double trapezoid(std::span<const double> f, double step) {
    if (f.size() < 2) {
        return 0.0;
    }
    double s = 0.0;
    for (double v : f) {
        s += v;
    }
    s -= 0.5 * (f.front() + f.back());
    return s * step;
}

std::vector<double> trapezoid_weights(const Grid1D &grid) {
    std::vector<double> w(grid.size(), grid.step());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

double raw_moment(std::span<const double> density, const Grid1D &grid, int k) {
    if (density.size() != grid.size()) {
        fail(ErrorCode::GridMismatch, "density and grid sizes differ");
    }
    std::vector<double> weighted(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        weighted[i] = std::pow(grid[i], k);
    }
    std::vector<double> w = trapezoid_weights(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        weighted[i] *= w[i];
    }
    return kernels::dot(weighted, density);
}

double moments(std::span<const double> density, const Grid1D &grid, int k) {
    const double mass = raw_moment(density, grid, 0);
    if (!(mass > 0.0)) {
        fail(ErrorCode::ZeroMass, fmt::format("density integrates to {}", mass));
    }
    return raw_moment(density, grid, k) / mass;
}

}  // namespace jwm

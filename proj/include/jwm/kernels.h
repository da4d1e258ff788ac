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

#ifndef JWM_KERNELS_H
#define JWM_KERNELS_H

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops shared by the numerics. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2/FMA variant. The variant
// is chosen once at startup from CPUID; setting JWM_KERNELS=scalar in the
// environment forces the reference path.

namespace jwm::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;
    /// sum_i conj(a[i]) * b[i]
    cplx (*cdot)(const cplx *a, const cplx *b, std::size_t n);
    /// sum_i |a[i]|^2
    double (*norm2)(const cplx *a, std::size_t n);
    /// sum_i a[i] * b[i]
    double (*dot)(const double *a, const double *b, std::size_t n);
    /// y[i] += alpha * x[i]
    void (*caxpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    /// out[i] = |a[i]|^2
    void (*abs2)(const cplx *a, double *out, std::size_t n);
    /// out[k] = (-1)^k * a[center + k] * conj(a[center - k]) for k in [0, max_lag].
    /// Requires max_lag <= center.
    void (*lag_products)(const cplx *a, std::size_t center, std::size_t max_lag, cplx *out);
};

const KernelTable &scalar_table();

/// nullptr when the build or the running CPU lacks AVX2+FMA.
const KernelTable *avx2_table();

/// The table every library routine uses.
const KernelTable &active();

cplx cdot(std::span<const cplx> a, std::span<const cplx> b);
double norm2(std::span<const cplx> a);
double dot(std::span<const double> a, std::span<const double> b);
void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void abs2(std::span<const cplx> a, std::span<double> out);

}  // namespace jwm::kernels

#endif

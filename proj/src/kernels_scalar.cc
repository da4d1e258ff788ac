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

#include "jwm/kernels.h"

namespace jwm::kernels {

namespace {

cplx cdot_scalar(const cplx *a, const cplx *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2_scalar(const cplx *a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

double dot_scalar(const double *a, const double *b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void caxpy_scalar(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void abs2_scalar(const cplx *a, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

void lag_products_scalar(const cplx *a, std::size_t center, std::size_t max_lag, cplx *out) {
    for (std::size_t k = 0; k <= max_lag; ++k) {
        cplx v = a[center + k] * std::conj(a[center - k]);
        out[k] = (k & 1) ? -v : v;
    }
}

}  // namespace

const KernelTable &scalar_table() {
    static const KernelTable table{
        "scalar", cdot_scalar, norm2_scalar, dot_scalar, caxpy_scalar, abs2_scalar, lag_products_scalar,
    };
    return table;
}

}  // namespace jwm::kernels

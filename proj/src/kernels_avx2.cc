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

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define JWM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace jwm::kernels {

#ifdef JWM_HAVE_AVX2_KERNELS

namespace {

#define JWM_AVX2 __attribute__((target("avx2,fma")))

// A __m256d holds two complex doubles laid out as [re0, im0, re1, im1].

JWM_AVX2 inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

JWM_AVX2 inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

JWM_AVX2 inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// u * w for packed complex pairs.
JWM_AVX2 inline __m256d cmul(__m256d u, __m256d w) {
    __m256d w_re = _mm256_movedup_pd(w);
    __m256d w_im = _mm256_permute_pd(w, 0xF);
    __m256d u_sw = _mm256_permute_pd(u, 0x5);
    return _mm256_fmaddsub_pd(u, w_re, _mm256_mul_pd(u_sw, w_im));
}

JWM_AVX2 cplx cdot_avx2(const cplx *a, const cplx *b, std::size_t n) {
    __m256d same = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = load2(a + i);
        __m256d vb = load2(b + i);
        same = _mm256_fmadd_pd(va, vb, same);
        cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), cross);
    }
    // same = [ar*br, ai*bi, ...]; cross = [ar*bi, ai*br, ...]
    alignas(32) double c[4];
    _mm256_store_pd(c, cross);
    double re = hsum(same);
    double im = (c[0] + c[2]) - (c[1] + c[3]);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

JWM_AVX2 double norm2_avx2(const cplx *a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = load2(a + i);
        __m256d v1 = load2(a + i + 2);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return s;
}

JWM_AVX2 double dot_avx2(const double *a, const double *b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

JWM_AVX2 void caxpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = load2(x + i);
        __m256d prod = _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), ai));
        store2(y + i, _mm256_add_pd(load2(y + i), prod));
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

JWM_AVX2 void abs2_avx2(const cplx *a, double *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = load2(a + i);
        __m256d v1 = load2(a + i + 2);
        __m256d s = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        // hadd interleaves: [a0, a2, a1, a3]
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(s, 0xD8));
    }
    for (; i < n; ++i) {
        out[i] = a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
}

JWM_AVX2 void lag_products_avx2(const cplx *a, std::size_t center, std::size_t max_lag, cplx *out) {
    const __m256d conj_mask = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    const __m256d parity = _mm256_set_pd(-1.0, -1.0, 1.0, 1.0);
    std::size_t k = 0;
    // Pair (k, k+1) reads a[center-k-1 .. center-k]; k stays even.
    for (; k + 1 <= max_lag; k += 2) {
        __m256d fwd = load2(a + center + k);
        __m256d back = load2(a + center - k - 1);
        back = _mm256_permute2f128_pd(back, back, 0x01);
        __m256d prod = cmul(fwd, _mm256_mul_pd(back, conj_mask));
        store2(out + k, _mm256_mul_pd(prod, parity));
    }
    for (; k <= max_lag; ++k) {
        cplx v = a[center + k] * std::conj(a[center - k]);
        out[k] = (k & 1) ? -v : v;
    }
}

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const KernelTable *avx2_table() {
    static const KernelTable table{
        "avx2", cdot_avx2, norm2_avx2, dot_avx2, caxpy_avx2, abs2_avx2, lag_products_avx2,
    };
    static const bool supported = cpu_has_avx2();
    return supported ? &table : nullptr;
}

#else

const KernelTable *avx2_table() {
    return nullptr;
}

#endif

}  // namespace jwm::kernels

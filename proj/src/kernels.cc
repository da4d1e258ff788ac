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

#include <cassert>
#include <cstdlib>
#include <cstring>

#include "jwm/kernels.h"

namespace jwm::kernels {

namespace {

const KernelTable &select_table() {
    const char *forced = std::getenv("JWM_KERNELS");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
        return scalar_table();
    }
    if (const KernelTable *fast = avx2_table()) {
        return *fast;
    }
    return scalar_table();
}

}  // namespace

const KernelTable &active() {
    static const KernelTable &table = select_table();
    return table;
}

cplx cdot(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    return active().cdot(a.data(), b.data(), a.size());
}

double norm2(std::span<const cplx> a) {
    return active().norm2(a.data(), a.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    return active().dot(a.data(), b.data(), a.size());
}

void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    assert(x.size() == y.size());
    active().caxpy(alpha, x.data(), y.data(), x.size());
}

void abs2(std::span<const cplx> a, std::span<double> out) {
    assert(a.size() == out.size());
    active().abs2(a.data(), out.data(), a.size());
}

}  // namespace jwm::kernels

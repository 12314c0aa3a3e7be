// SPDX-License-Identifier: Apache-2.0
//
// corrbound - eigenvalue bounds for exponential-model spatial correlation matrices
// Copyright (C) 2026 The corrbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// NEON (AArch64 Advanced SIMD) kernels, two doubles per register.

#include "corrbound/simd/kernels.hpp"

#include <arm_neon.h>

namespace corrbound::simd::detail {

namespace {

double dot_neon(const double* x, const double* y, std::size_t n)
{
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n)
{
    const float64x2_t a = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), a, vld1q_f64(x + i)));
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void rank2_row_neon(double* row, double alpha, const double* x, double beta, const double* y,
                    std::size_t n)
{
    const float64x2_t a = vdupq_n_f64(alpha);
    const float64x2_t b = vdupq_n_f64(beta);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t t = vfmaq_f64(vmulq_f64(b, vld1q_f64(y + i)), a, vld1q_f64(x + i));
        vst1q_f64(row + i, vsubq_f64(vld1q_f64(row + i), t));
    }
    for (; i < n; ++i)
        row[i] -= alpha * x[i] + beta * y[i];
}

double sum_squares_neon(const double* x, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i)
        s += x[i] * x[i];
    return s;
}

} // namespace

const KernelTable neon_table{
    Isa::neon, &dot_neon, &axpy_neon, &rank2_row_neon, &sum_squares_neon,
};

} // namespace corrbound::simd::detail

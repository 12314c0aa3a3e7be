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

// AVX2 + FMA kernels. This file is compiled with -mavx2 -mfma and must only be
// reached through the dispatch table after a runtime CPU check.

#include "corrbound/simd/kernels.hpp"

#include <immintrin.h>

namespace corrbound::simd::detail {

namespace {

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
        acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), acc2);
        acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), acc3);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = hsum(_mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
    for (; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n)
{
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4,
                         _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void rank2_row_avx2(double* row, double alpha, const double* x, double beta, const double* y,
                    std::size_t n)
{
    const __m256d a = _mm256_set1_pd(alpha);
    const __m256d b = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d t0 = _mm256_mul_pd(b, _mm256_loadu_pd(y + i));
        __m256d t1 = _mm256_mul_pd(b, _mm256_loadu_pd(y + i + 4));
        t0 = _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), t0);
        t1 = _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i + 4), t1);
        _mm256_storeu_pd(row + i, _mm256_sub_pd(_mm256_loadu_pd(row + i), t0));
        _mm256_storeu_pd(row + i + 4, _mm256_sub_pd(_mm256_loadu_pd(row + i + 4), t1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_mul_pd(b, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(row + i, _mm256_sub_pd(_mm256_loadu_pd(row + i), t));
    }
    for (; i < n; ++i)
        row[i] -= alpha * x[i] + beta * y[i];
}

double sum_squares_avx2(const double* x, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(x + i);
        const __m256d v1 = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += x[i] * x[i];
    return acc;
}

} // namespace

const KernelTable avx2_table{
    Isa::avx2, &dot_avx2, &axpy_avx2, &rank2_row_avx2, &sum_squares_avx2,
};

} // namespace corrbound::simd::detail

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

// Reference kernels. Plain left-to-right loops; the SIMD variants are tested
// against these.

#include "corrbound/simd/kernels.hpp"

namespace corrbound::simd::detail {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

void rank2_row_scalar(double* row, double alpha, const double* x, double beta, const double* y,
                      std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        row[i] -= alpha * x[i] + beta * y[i];
}

double sum_squares_scalar(const double* x, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * x[i];
    return acc;
}

} // namespace

const KernelTable scalar_table{
    Isa::scalar, &dot_scalar, &axpy_scalar, &rank2_row_scalar, &sum_squares_scalar,
};

} // namespace corrbound::simd::detail

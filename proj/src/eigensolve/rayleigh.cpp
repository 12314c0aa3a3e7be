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

#include "corrbound/eigensolve.hpp"
#include "corrbound/error.hpp"
#include "corrbound/simd/kernels.hpp"

#include <string>

namespace corrbound {

namespace {

void check_vector(const CorrMatrix& matrix, std::size_t len, double norm2)
{
    if (len != matrix.size())
        throw_domain("vector", "dimension " + std::to_string(len) + " does not match matrix dimension " +
                                   std::to_string(matrix.size()));
    if (!(norm2 > 0.0))
        throw_domain("vector", "Rayleigh quotient of a zero vector is undefined");
}

} // namespace

double rayleigh_quotient(const CorrMatrix& matrix, std::span<const cdouble> f)
{
    double norm2 = 0.0;
    for (const auto& z : f)
        norm2 += std::norm(z);
    check_vector(matrix, f.size(), norm2);

    const std::size_t n = matrix.size();
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cdouble row_sum = 0.0;
        const auto row = matrix.row(i);
        for (std::size_t j = 0; j < n; ++j)
            row_sum += row[j] * f[j];
        acc += std::conj(f[i]) * row_sum;
    }
    return acc.real() / norm2;
}

double rayleigh_quotient(const CorrMatrix& matrix, std::span<const double> f)
{
    const auto& kernels = simd::active();
    const double norm2 = kernels.sum_squares(f.data(), f.size());
    check_vector(matrix, f.size(), norm2);
    if (!matrix.is_real()) {
        std::vector<cdouble> fc(f.begin(), f.end());
        return rayleigh_quotient(matrix, std::span<const cdouble>(fc));
    }

    const std::size_t n = matrix.size();
    const std::vector<double> a = matrix.real_entries();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += f[i] * kernels.dot(a.data() + i * n, f.data(), n);
    return acc / norm2;
}

} // namespace corrbound

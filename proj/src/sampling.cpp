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

#include "corrbound/corrmat.hpp"
#include "corrbound/eigensolve.hpp"
#include "corrbound/error.hpp"

#include <cmath>
#include <random>
#include <string>

namespace corrbound {

CorrMatrix psd_sqrt(const CorrMatrix& matrix)
{
    const EigenDecomposition eig = hermitian_eigen(matrix);
    const std::size_t n = matrix.size();
    const double top = std::max(eig.spectrum.max(), 0.0);
    const double floor = -kPsdClampTolerance * top;

    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.spectrum.values[k];
        if (lambda < floor)
            throw Error(ErrorKind::not_psd, "eigenvalue " + std::to_string(lambda) + " below clamp tolerance");
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }

    // R^(1/2) = sum_k sqrt(lambda_k) u_k u_k^H
    std::vector<cdouble> out(n * n, cdouble(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        if (roots[k] == 0.0)
            continue;
        const auto& u = eig.vectors[k];
        for (std::size_t i = 0; i < n; ++i) {
            const cdouble ui = roots[k] * u[i];
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] += ui * std::conj(u[j]);
        }
    }
    // Round-off leaves the result Hermitian only to ~eps; symmetrize before
    // handing it to the validating constructor.
    for (std::size_t i = 0; i < n; ++i) {
        out[i * n + i] = {out[i * n + i].real(), 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            const cdouble avg = 0.5 * (out[i * n + j] + std::conj(out[j * n + i]));
            out[i * n + j] = avg;
            out[j * n + i] = std::conj(avg);
        }
    }
    return CorrMatrix::from_entries(n, std::move(out));
}

std::vector<std::vector<cdouble>> sample_correlated(const CorrMatrix& matrix, std::size_t count, std::uint64_t seed)
{
    if (count == 0)
        throw_domain("count", "must be positive");

    const CorrMatrix root = psd_sqrt(matrix);
    const std::size_t n = matrix.size();

    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

    std::vector<std::vector<cdouble>> draws;
    draws.reserve(count);
    std::vector<cdouble> white(n);
    for (std::size_t s = 0; s < count; ++s) {
        for (auto& w : white) {
            const double re = normal(engine);
            const double im = normal(engine);
            w = {re, im};
        }
        std::vector<cdouble> h(n, cdouble(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = root.row(i);
            cdouble acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += row[j] * white[j];
            h[i] = acc;
        }
        draws.push_back(std::move(h));
    }
    return draws;
}

} // namespace corrbound

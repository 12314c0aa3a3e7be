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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace corrbound {

// Circulant C with first row c has eigenvalues
//   lambda_k = sum_j c_j exp(2 pi i j k / m),  k = 0..m-1.
// For Hermitian c this is real: sum_j Re(c_j) cos(2 pi jk/m) - Im(c_j) sin(2 pi jk/m).
// Angles are taken from a table indexed by (j*k mod m), so no argument
// grows beyond 2 pi.
Spectrum circulant_eigenvalues(std::span<const cdouble> first_row)
{
    const std::size_t m = first_row.size();
    if (m == 0)
        throw_domain("first_row", "must be nonempty");

    double scale = 0.0;
    for (const auto& z : first_row)
        scale = std::max(scale, std::abs(z));
    const double tol = 1e-12 * std::max(scale, 1.0);
    for (std::size_t j = 0; j < m; ++j)
        if (std::abs(first_row[(m - j) % m] - std::conj(first_row[j])) > tol)
            throw_domain("first_row", "does not describe a Hermitian circulant matrix");

    std::vector<double> cos_table(m), sin_table(m);
    for (std::size_t t = 0; t < m; ++t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
        cos_table[t] = std::cos(angle);
        sin_table[t] = std::sin(angle);
    }

    std::vector<double> re(m), im(m);
    for (std::size_t j = 0; j < m; ++j) {
        re[j] = first_row[j].real();
        im[j] = first_row[j].imag();
    }

    // Gather the twiddles of one output bin contiguously, then use the dot kernel.
    std::vector<double> cos_row(m), sin_row(m);
    const auto& kernels = simd::active();
    std::vector<double> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t t = 0;
        for (std::size_t j = 0; j < m; ++j) {
            cos_row[j] = cos_table[t];
            sin_row[j] = sin_table[t];
            t += k;
            if (t >= m)
                t -= m;
        }
        values[k] = kernels.dot(re.data(), cos_row.data(), m) - kernels.dot(im.data(), sin_row.data(), m);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values)};
}

} // namespace corrbound

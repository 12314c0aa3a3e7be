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

// Test-only reference computations. Deliberately naive and independent of the
// library: cyclic Jacobi rotations for eigenvalues, partial-pivot elimination
// for determinants, direct summation for the DFT.

#ifndef CORRBOUND_TESTS_ORACLES_HPP
#define CORRBOUND_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using cdouble = std::complex<double>;

/// Dense KMS matrix straight from the definition, row-major.
inline std::vector<cdouble> kms(std::size_t n, double a, double theta = 0.0)
{
    std::vector<cdouble> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double k = std::abs(static_cast<double>(i) - static_cast<double>(j));
            const cdouble v = std::pow(a, k) * std::exp(cdouble(0.0, theta * k));
            m[i * n + j] = i >= j ? v : std::conj(v);
        }
    return m;
}

/// Cyclic Jacobi on a real symmetric matrix. Eigenvalues sorted descending.
inline std::vector<double> jacobi_symmetric(std::vector<double> m, std::size_t n)
{
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += m[p * n + q] * m[p * n + q];
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m[p * n + q];
                if (std::abs(apq) < 1e-300)
                    continue;
                const double theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k * n + p], mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p * n + k], mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = m[i * n + i];
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// Hermitian eigenvalues through the real 2n x 2n embedding [[A, -B], [B, A]],
/// whose spectrum is that of A + jB with every value doubled.
inline std::vector<double> jacobi_hermitian(const std::vector<cdouble>& h, std::size_t n)
{
    const std::size_t m = 2 * n;
    std::vector<double> e(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h[i * n + j].real(), im = h[i * n + j].imag();
            e[i * m + j] = re;
            e[(i + n) * m + (j + n)] = re;
            e[i * m + (j + n)] = -im;
            e[(i + n) * m + j] = im;
        }
    const auto doubled = jacobi_symmetric(std::move(e), m);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

/// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(std::vector<double> m, std::size_t n)
{
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c]))
                piv = r;
        if (m[piv * n + c] == 0.0)
            return 0.0;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m[c * n + k], m[piv * n + k]);
            det = -det;
        }
        det *= m[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m[r * n + c] / m[c * n + c];
            for (std::size_t k = c; k < n; ++k)
                m[r * n + k] -= f * m[c * n + k];
        }
    }
    return det;
}

/// Naive O(m^2) DFT of a circulant's first row: lambda_k = sum_j c_j w^{jk}.
inline std::vector<double> circulant_spectrum(const std::vector<cdouble>& row)
{
    const std::size_t m = row.size();
    std::vector<double> ev(m);
    for (std::size_t k = 0; k < m; ++k) {
        cdouble s = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            s += row[j] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m));
        ev[k] = s.real();
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// Closed forms written out longhand with std::pow.
inline double upper_new(std::size_t n, double a) { return (1 + a) * (1 - std::pow(a, double(n) - 1)) / (1 - a); }
inline double lower_new(std::size_t n, double a)
{
    return (1 + a) / (1 - a) - 2 * a * (1 - std::pow(a, double(n))) / (double(n) * (1 - a) * (1 - a));
}
inline double min_upper_new(std::size_t n, double a)
{
    return (1 - a) / (1 + a) + 2 * a * (1 - std::pow(-a, double(n))) / (double(n) * (1 + a) * (1 + a));
}

} // namespace oracle

#endif

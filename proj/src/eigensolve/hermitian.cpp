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
#include "corrbound/simd/kernels.hpp"
#include "tridiagonal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace corrbound {

double Spectrum::sum() const
{
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double Spectrum::product() const
{
    return std::accumulate(values.begin(), values.end(), 1.0, std::multiplies<>());
}

namespace {

bool is_diagonal(const CorrMatrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j) != cdouble(0.0, 0.0))
                return false;
    return true;
}

std::vector<std::size_t> descending_order(const std::vector<double>& values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    return order;
}

Spectrum sorted_spectrum(std::vector<double> values)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values)};
}

// Applies Q D to the real eigenvector matrix of the tridiagonal; returns the
// eigenvectors of the original matrix column-wise in row-major storage.
template <typename T>
std::vector<cdouble> back_transform(const detail::Reflectors<T>& refl, const std::vector<double>& z, std::size_t n)
{
    std::vector<cdouble> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            out[i * n + c] = refl.phase[i] * z[i * n + c];

    std::vector<cdouble> s(n);
    for (std::size_t kk = refl.v.size(); kk-- > 0;) {
        if (refl.tau[kk] == 0.0)
            continue;
        const auto& v = refl.v[kk];
        const std::size_t base = kk + 1;
        std::fill(s.begin(), s.end(), cdouble(0.0, 0.0));
        for (std::size_t i = 0; i < v.size(); ++i) {
            const cdouble vi = std::conj(cdouble(v[i]));
            const cdouble* row = out.data() + (base + i) * n;
            for (std::size_t c = 0; c < n; ++c)
                s[c] += vi * row[c];
        }
        for (std::size_t c = 0; c < n; ++c)
            s[c] *= refl.tau[kk];
        for (std::size_t i = 0; i < v.size(); ++i) {
            const cdouble vi(v[i]);
            cdouble* row = out.data() + (base + i) * n;
            for (std::size_t c = 0; c < n; ++c)
                row[c] -= vi * s[c];
        }
    }
    return out;
}

template <typename T>
EigenDecomposition solve_with_vectors(std::vector<T> work, std::size_t n)
{
    detail::Reflectors<T> refl;
    detail::Tridiagonal t = detail::tridiagonalize(work, n, &refl);
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        z[i * n + i] = 1.0;
    detail::tridiagonal_ql(t, &z);
    const std::vector<cdouble> full = back_transform(refl, z, n);

    EigenDecomposition out;
    for (std::size_t col : descending_order(t.diag)) {
        out.spectrum.values.push_back(t.diag[col]);
        std::vector<cdouble> vec(n);
        for (std::size_t i = 0; i < n; ++i)
            vec[i] = full[i * n + col];
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

} // namespace

Spectrum hermitian_eigenvalues(const CorrMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (is_diagonal(matrix)) {
        std::vector<double> diag(n);
        for (std::size_t i = 0; i < n; ++i)
            diag[i] = matrix(i, i).real();
        return sorted_spectrum(std::move(diag));
    }

    detail::Tridiagonal t;
    if (matrix.is_real()) {
        std::vector<double> work = matrix.real_entries();
        t = detail::tridiagonalize(work, n, nullptr);
    } else {
        std::vector<cdouble> work(matrix.entries().begin(), matrix.entries().end());
        t = detail::tridiagonalize(work, n, nullptr);
    }
    detail::tridiagonal_ql(t, nullptr);
    return sorted_spectrum(std::move(t.diag));
}

EigenDecomposition hermitian_eigen(const CorrMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (is_diagonal(matrix)) {
        std::vector<double> diag(n);
        for (std::size_t i = 0; i < n; ++i)
            diag[i] = matrix(i, i).real();
        EigenDecomposition out;
        for (std::size_t idx : descending_order(diag)) {
            out.spectrum.values.push_back(diag[idx]);
            std::vector<cdouble> e(n, cdouble(0.0, 0.0));
            e[idx] = 1.0;
            out.vectors.push_back(std::move(e));
        }
        return out;
    }
    if (matrix.is_real())
        return solve_with_vectors(matrix.real_entries(), n);
    return solve_with_vectors(std::vector<cdouble>(matrix.entries().begin(), matrix.entries().end()), n);
}

} // namespace corrbound

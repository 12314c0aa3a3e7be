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
#include "corrbound/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace corrbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double x)
{
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi)
        r = 0.0;
    return r;
}

void check_magnitude(const std::string& name, double a)
{
    if (!std::isfinite(a) || a < 0.0 || a >= 1.0)
        throw_domain(name, "magnitude must lie in [0, 1), got " + std::to_string(a));
}

} // namespace

CorrelationCoefficient CorrelationCoefficient::make(double a, double theta)
{
    check_magnitude("a", a);
    if (!std::isfinite(theta))
        throw_domain("theta", "phase must be finite");
    return CorrelationCoefficient(a, reduce_angle(theta));
}

cdouble CorrelationCoefficient::power(std::size_t k) const
{
    const double mag = std::pow(a_, static_cast<double>(k));
    if (theta_ == 0.0)
        return {mag, 0.0};
    const double angle = reduce_angle(static_cast<double>(k) * theta_);
    return std::polar(mag, angle);
}

std::string_view to_string(MatrixTag tag) noexcept
{
    switch (tag) {
    case MatrixTag::exponential: return "exponential";
    case MatrixTag::circulant_expansion: return "circulant-expansion";
    case MatrixTag::kronecker: return "kronecker";
    case MatrixTag::generic_hermitian: return "generic-hermitian";
    }
    return "unknown";
}

CorrMatrix::CorrMatrix(std::size_t n, std::vector<cdouble> entries, MatrixTag tag)
    : n_(n), entries_(std::move(entries)), tag_(tag)
{
    real_ = std::all_of(entries_.begin(), entries_.end(), [](const cdouble& z) { return z.imag() == 0.0; });
}

CorrMatrix CorrMatrix::from_entries(std::size_t n, std::vector<cdouble> entries, MatrixTag tag)
{
    if (n == 0)
        throw Error(ErrorKind::size, "matrix dimension must be positive");
    if (entries.size() != n * n)
        throw Error(ErrorKind::size, "expected " + std::to_string(n * n) + " entries, got " +
                                         std::to_string(entries.size()));
    double scale = 0.0;
    for (const auto& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw_domain("entries", "matrix contains non-finite values");
        scale = std::max(scale, std::abs(z));
    }
    const double tol = 1e-12 * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(entries[i * n + i].imag()) > tol)
            throw_domain("entries", "diagonal entry " + std::to_string(i) + " is not real");
        entries[i * n + i] = {entries[i * n + i].real(), 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            const cdouble lower = entries[i * n + j];
            if (std::abs(lower - std::conj(entries[j * n + i])) > tol)
                throw_domain("entries", "matrix is not Hermitian at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
            entries[j * n + i] = std::conj(lower);
        }
    }
    return CorrMatrix(n, std::move(entries), tag);
}

std::vector<double> CorrMatrix::real_entries() const
{
    std::vector<double> out(entries_.size());
    std::transform(entries_.begin(), entries_.end(), out.begin(), [](const cdouble& z) { return z.real(); });
    return out;
}

void UpaSpec::validate() const
{
    if (n_h < 1)
        throw_domain("n_h", "horizontal antenna count must be at least 1");
    if (n_v < 1)
        throw_domain("n_v", "vertical antenna count must be at least 1");
    check_magnitude("a_h", a_h);
    check_magnitude("a_v", a_v);
}

CorrMatrix build_exponential(std::size_t n, const CorrelationCoefficient& r)
{
    if (n == 0)
        throw_domain("n", "dimension must be at least 1");

    std::vector<cdouble> powers(n);
    for (std::size_t k = 0; k < n; ++k)
        powers[k] = r.power(k);

    std::vector<cdouble> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            entries[i * n + j] = powers[i - j];
            entries[j * n + i] = std::conj(powers[i - j]);
        }
        entries[i * n + i] = {1.0, 0.0};
    }
    return CorrMatrix(n, std::move(entries), MatrixTag::exponential);
}

std::vector<cdouble> circulant_expansion_row(std::size_t n, double a)
{
    if (n < 2)
        throw Error(ErrorKind::size, "n: circulant expansion needs n >= 2 (dimension 2(n-1) is degenerate)");
    check_magnitude("a", a);

    const std::size_t m = 2 * (n - 1);
    std::vector<cdouble> row(m);
    for (std::size_t j = 0; j < m; ++j)
        row[j] = {std::pow(a, static_cast<double>(std::min(j, m - j))), 0.0};
    return row;
}

CorrMatrix build_circulant_expansion(std::size_t n, double a)
{
    const std::vector<cdouble> first = circulant_expansion_row(n, a);
    const std::size_t m = first.size();
    std::vector<cdouble> entries(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            entries[i * m + j] = first[(j + m - i) % m];
    return CorrMatrix(m, std::move(entries), MatrixTag::circulant_expansion);
}

CorrMatrix kronecker(const CorrMatrix& lhs, const CorrMatrix& rhs, std::size_t cap)
{
    const std::size_t p = lhs.size();
    const std::size_t q = rhs.size();
    if (q != 0 && p > cap / q)
        throw Error(ErrorKind::size, "Kronecker dimension " + std::to_string(p) + "x" + std::to_string(q) +
                                         " exceeds cap " + std::to_string(cap));
    const std::size_t n = p * q;
    std::vector<cdouble> entries(n * n);
    for (std::size_t ih = 0; ih < p; ++ih)
        for (std::size_t jh = 0; jh < p; ++jh) {
            const cdouble outer = lhs(ih, jh);
            for (std::size_t iv = 0; iv < q; ++iv) {
                cdouble* dst = entries.data() + (ih * q + iv) * n + jh * q;
                for (std::size_t jv = 0; jv < q; ++jv)
                    dst[jv] = outer * rhs(iv, jv);
            }
        }
    return CorrMatrix(n, std::move(entries), MatrixTag::kronecker);
}

CorrMatrix build_upa(const UpaSpec& spec, std::size_t cap)
{
    spec.validate();
    if (spec.n_h > cap / spec.n_v)
        throw Error(ErrorKind::size, "UPA dimension n_h*n_v exceeds cap " + std::to_string(cap));
    const CorrMatrix rh = build_exponential(spec.n_h, CorrelationCoefficient::make(spec.a_h));
    const CorrMatrix rv = build_exponential(spec.n_v, CorrelationCoefficient::make(spec.a_v));
    return kronecker(rh, rv, cap);
}

} // namespace corrbound

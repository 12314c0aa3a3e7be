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

#include <catch_amalgamated.hpp>

using namespace corrbound;
using Catch::Matchers::WithinAbs;

TEST_CASE("square root squares back to the matrix", "[sampling]")
{
    for (double theta : {0.0, 0.8}) {
        const auto r = build_exponential(7, CorrelationCoefficient::make(0.85, theta));
        const auto s = psd_sqrt(r);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                cdouble acc = 0.0;
                for (std::size_t k = 0; k < 7; ++k)
                    acc += s(i, k) * s(k, j);
                CHECK(std::abs(acc - r(i, j)) < 1e-12);
            }
    }
}

TEST_CASE("indefinite input is rejected, tiny negative round-off is clamped", "[sampling]")
{
    const auto bad = CorrMatrix::from_entries(2, {1.0, 2.0, 2.0, 1.0});
    try {
        psd_sqrt(bad);
        FAIL("expected not_psd");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_psd);
    }
    // Rank-one all-ones matrix: eigenvalues 2 and 0 (up to round-off).
    const auto singular = CorrMatrix::from_entries(2, {1.0, 1.0, 1.0, 1.0});
    CHECK_NOTHROW(psd_sqrt(singular));
}

TEST_CASE("draws are reproducible from the seed", "[sampling]")
{
    const auto r = build_exponential(4, CorrelationCoefficient::make(0.5));
    const auto a = sample_correlated(r, 10, 99);
    const auto b = sample_correlated(r, 10, 99);
    const auto c = sample_correlated(r, 10, 100);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() == 10);
    CHECK(a.front().size() == 4);
    CHECK_THROWS_AS(sample_correlated(r, 0, 1), Error);
}

TEST_CASE("sample covariance converges to R", "[sampling][property]")
{
    const std::size_t n = 4, count = 40000;
    const auto r = build_exponential(n, CorrelationCoefficient::make(0.6, 0.4));
    const auto draws = sample_correlated(r, count, 2026);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cdouble acc = 0.0;
            for (const auto& h : draws)
                acc += h[i] * std::conj(h[j]);
            acc /= double(count);
            // Standard error of each entry is about 1/sqrt(count) = 0.005.
            CHECK(std::abs(acc - r(i, j)) < 0.03);
        }
}

TEST_CASE("2x2 sample correlation at a = 0.9", "[sampling]")
{
    const auto draws = sample_correlated(build_exponential(2, CorrelationCoefficient::make(0.9)), 10000, 1);
    cdouble acc = 0.0;
    for (const auto& h : draws)
        acc += h[0] * std::conj(h[1]);
    acc /= 10000.0;
    CHECK(std::abs(acc.real() - 0.9) < 0.05);
}

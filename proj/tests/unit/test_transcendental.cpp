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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>

using namespace corrbound;
using Catch::Matchers::WithinAbs;

TEST_CASE("phase to eigenvalue map", "[transcendental]")
{
    for (double a : {0.1, 0.5, 0.95})
        for (double phi : {0.1, 1.0, 2.0, 3.1}) {
            // This form cancels near phi = pi, hence the looser tolerance.
            const double want = (1 - a * a) / (1 + a * a + 2 * a * std::cos(phi));
            CHECK_THAT(eigenvalue_from_phase(a, phi), WithinAbs(want, 1e-12 * want));
        }
    // Endpoints reproduce the classic limits.
    CHECK_THAT(eigenvalue_from_phase(0.5, std::numbers::pi), WithinAbs(3.0, 1e-14));
    CHECK_THAT(eigenvalue_from_phase(0.5, 0.0), WithinAbs(1.0 / 3.0, 1e-15));
}

TEST_CASE("2x2 root is at pi/2", "[transcendental]")
{
    // n = 2: eigenvalues 1 +- a; both phases satisfy the characteristic equation.
    const auto r = transcendental_eigenvalues(2, 0.4);
    REQUIRE(r.roots.phis.size() == 2);
    CHECK_THAT(r.spectrum.values[0], WithinAbs(1.4, 1e-14));
    CHECK_THAT(r.spectrum.values[1], WithinAbs(0.6, 1e-14));
}

TEST_CASE("characteristic route agrees with the dense oracle", "[transcendental][oracle]")
{
    for (std::size_t n : {2u, 3u, 5u, 16u, 63u, 64u})
        for (double a : {0.05, 0.3, 0.6, 0.9, 0.95}) {
            INFO("n = " << n << " a = " << a);
            const auto t = transcendental_eigenvalues(n, a);
            const auto o = hermitian_eigenvalues(build_exponential(n, CorrelationCoefficient::make(a)));
            REQUIRE(t.spectrum.size() == n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK_THAT(t.spectrum.values[i], WithinAbs(o.values[i], 1e-10));
        }
}

TEST_CASE("roots are distinct, inside (0, pi) and near-zeros of g", "[transcendental][property]")
{
    for (std::size_t n : {4u, 37u, 256u, 1024u}) {
        const double a = 0.9;
        const auto t = transcendental_eigenvalues(n, a);
        const auto& phis = t.roots.phis;
        REQUIRE(phis.size() == n);
        CHECK((std::is_sorted(phis.begin(), phis.end(), std::greater<>()) ||
               std::is_sorted(phis.begin(), phis.end())));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(phis[i] > 0.0);
            CHECK(phis[i] < std::numbers::pi);
            // g has slope O(n c1) near a root; scale accordingly.
            CHECK(std::abs(characteristic_residual(n, a, phis[i])) < 1e-9 * double(n) * 20.0);
        }
        CHECK(std::adjacent_find(phis.begin(), phis.end()) == phis.end());
        CHECK(std::is_sorted(t.spectrum.values.begin(), t.spectrum.values.end(), std::greater<>()));
    }
}

TEST_CASE("coarse grid is refined until every root is isolated", "[transcendental]")
{
    RootScanOptions coarse;
    coarse.points_per_root = 1;
    coarse.max_refinements = 8;
    const auto t = transcendental_eigenvalues(40, 0.7, coarse);
    const auto ref = transcendental_eigenvalues(40, 0.7);
    for (std::size_t i = 0; i < 40; ++i)
        CHECK_THAT(t.spectrum.values[i], WithinAbs(ref.spectrum.values[i], 1e-12));
}

TEST_CASE("degenerate inputs", "[transcendental]")
{
    const auto id = transcendental_eigenvalues(5, 0.0);
    CHECK(id.spectrum.values == std::vector<double>(5, 1.0));
    CHECK(id.roots.phis.empty());
    CHECK_THROWS_AS(transcendental_eigenvalues(1, 0.5), Error);
    CHECK_THROWS_AS(transcendental_eigenvalues(4, 1.0), Error);
}

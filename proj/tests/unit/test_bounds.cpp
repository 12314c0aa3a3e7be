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

#include "corrbound/bounds.hpp"
#include "corrbound/error.hpp"
#include "oracles/oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace corrbound;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected corrbound::Error");
    return ErrorKind::io;
}

} // namespace

TEST_CASE("frozen values at n = 4, a = 0.5", "[bounds]")
{
    CHECK_THAT(max_eig_upper_new(4, 0.5), WithinAbs(2.625, 1e-15));
    CHECK_THAT(max_eig_lower_new(4, 0.5), WithinAbs(2.0625, 1e-15));
    CHECK_THAT(min_eig_upper_new(4, 0.5), WithinAbs(0.4375, 1e-15));
    CHECK_THAT(max_gap(4, 0.5), WithinAbs(0.5625, 1e-15));
    CHECK_THAT(max_eig_upper_prev(0.5), WithinAbs(3.0, 1e-15));
    CHECK_THAT(min_eig_lower_prev(0.5), WithinAbs(1.0 / 3.0, 1e-15));
    const auto c = condition_number_bounds(4, 0.5);
    CHECK_THAT(c.lower, WithinAbs(2.0625 / 0.4375, 1e-14));
    CHECK_THAT(c.upper, WithinAbs(7.875, 1e-14));
}

TEST_CASE("closed forms match longhand evaluation", "[bounds][oracle]")
{
    for (std::size_t n : {2u, 3u, 7u, 50u, 1000u})
        for (double a : {0.0, 0.05, 0.5, 0.9, 0.99}) {
            CHECK_THAT(max_eig_upper_new(n, a), WithinRel(oracle::upper_new(n, a), 1e-12));
            CHECK_THAT(max_eig_lower_new(n, a), WithinRel(oracle::lower_new(n, a), 1e-12));
            CHECK_THAT(min_eig_upper_new(n, a), WithinRel(oracle::min_upper_new(n, a), 1e-12));
        }
}

TEST_CASE("n = 2 collapses to 1 +- a", "[bounds][property]")
{
    for (int i = 1; i <= 19; ++i) {
        const double a = 0.05 * i;
        CHECK_THAT(max_eig_upper_new(2, a), WithinRel(1 + a, 1e-12));
        CHECK_THAT(max_eig_lower_new(2, a), WithinRel(1 + a, 1e-12));
        CHECK_THAT(min_eig_upper_new(2, a), WithinRel(1 - a, 1e-12));
    }
}

TEST_CASE("bounds are ordered and improve the previous ones", "[bounds][property]")
{
    for (std::size_t n = 2; n <= 200; n += 3)
        for (double a : {0.01, 0.3, 0.7, 0.97}) {
            CHECK(max_eig_lower_new(n, a) <= max_eig_upper_new(n, a) + 1e-12);
            CHECK(max_eig_upper_new(n, a) <= max_eig_upper_prev(a));
            CHECK(min_eig_lower_prev(a) <= min_eig_upper_new(n, a));
            CHECK(max_gap(n, a) >= -1e-12);
        }
}

TEST_CASE("gap limits", "[bounds]")
{
    CHECK(max_gap(10, 0.0) == 0.0);
    CHECK_THAT(max_gap(10, 0.999999), WithinAbs(8.0, 1e-3));
    CHECK_THAT(max_gap(32, 0.999999), WithinAbs(30.0, 1e-2));
}

TEST_CASE("ipow matches repeated multiplication", "[bounds]")
{
    CHECK(ipow(2.0, 0) == 1.0);
    CHECK(ipow(2.0, 10) == 1024.0);
    CHECK(ipow(-0.5, 3) == -0.125);
    CHECK_THAT(ipow(0.9, 1024), WithinRel(std::pow(0.9, 1024), 1e-12));
}

TEST_CASE("argument validation", "[bounds]")
{
    CHECK(kind_of([] { max_eig_upper_new(1, 0.5); }) == ErrorKind::domain);
    CHECK(kind_of([] { max_eig_lower_new(4, -0.1); }) == ErrorKind::domain);
    CHECK(kind_of([] { max_eig_upper_prev(1.0); }) == ErrorKind::domain);
    CHECK(kind_of([] { max_eig_upper_prev(1.0 - 1e-9); }) == ErrorKind::range);
    CHECK(kind_of([] { min_eig_upper_new(3, std::nan("")); }) == ErrorKind::domain);
}

TEST_CASE("condition number bounds bracket the true condition number", "[bounds][property]")
{
    for (std::size_t n : {2u, 6u, 30u})
        for (double a : {0.0, 0.4, 0.9}) {
            const auto r = bound_report(n, a);
            REQUIRE(r.lambda_max_true);
            const double kappa = *r.lambda_max_true / *r.lambda_min_true;
            CHECK(r.condition.lower <= kappa * (1 + 1e-12));
            CHECK(kappa <= r.condition.upper * (1 + 1e-12));
        }
    CHECK_FALSE(bound_report(5, 0.5, false).lambda_max_true.has_value());
}

TEST_CASE("UPA bounds are products of the factor bounds", "[bounds][upa]")
{
    const UpaSpec spec{4, 0.6, 8, 0.9};
    const auto r = upa_bounds(spec);
    CHECK_THAT(r.max_upper_new, WithinRel(max_eig_upper_new(4, 0.6) * max_eig_upper_new(8, 0.9), 1e-14));
    CHECK_THAT(r.max_lower_new, WithinRel(max_eig_lower_new(4, 0.6) * max_eig_lower_new(8, 0.9), 1e-14));
    CHECK_THAT(r.max_upper_prev, WithinRel(4.0 * 19.0, 1e-14));
    CHECK(*r.lambda_max_true <= r.max_upper_new);
    CHECK(*r.lambda_max_true >= r.max_lower_new);
    CHECK(*r.lambda_min_true >= r.min_lower_prev - 1e-12);
    CHECK(*r.lambda_min_true <= r.min_upper_new + 1e-12);
    CHECK(kind_of([] { upa_bounds(UpaSpec{1, 0.5, 4, 0.5}); }) == ErrorKind::domain);
}

TEST_CASE("2x2 condition number bounds", "[bounds]")
{
    const auto c = condition_number_bounds(2, 0.5);
    CHECK_THAT(c.lower, WithinAbs(3.0, 1e-14));
    CHECK_THAT(c.upper, WithinAbs(4.5, 1e-14));
    CHECK(condition_number_bounds(5, 0.0).lower == 1.0);
    CHECK(condition_number_bounds(5, 0.0).upper == 1.0);
}

TEST_CASE("upper bound approaches the classic bound for large n", "[bounds]")
{
    CHECK(max_eig_upper_prev(0.5) - max_eig_upper_new(200, 0.5) < 1e-20 + 3.0 * std::pow(0.5, 199));
    CHECK(max_eig_upper_prev(0.5) - max_eig_upper_new(200, 0.5) >= 0.0);
}

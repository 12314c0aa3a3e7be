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
#include "corrbound/eigensolve.hpp"
#include "corrbound/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace corrbound {

namespace {

void check_a(double a)
{
    if (!std::isfinite(a) || a < 0.0 || a >= 1.0)
        throw_domain("a", "magnitude must lie in [0, 1), got " + std::to_string(a));
    if (a > 1.0 - kNearOneCutoff)
        throw Error(ErrorKind::range, "a = " + std::to_string(a) + " is within 1e-8 of 1; bounds diverge");
}

void check_n(std::size_t n)
{
    if (n < 2)
        throw_domain("n", "bound requires n >= 2, got " + std::to_string(n));
}

} // namespace

double ipow(double x, std::size_t k) noexcept
{
    double result = 1.0;
    while (k > 0) {
        if (k & 1U)
            result *= x;
        x *= x;
        k >>= 1U;
    }
    return result;
}

double max_eig_upper_prev(double a)
{
    check_a(a);
    return (1.0 + a) / (1.0 - a);
}

double min_eig_lower_prev(double a)
{
    check_a(a);
    return (1.0 - a) / (1.0 + a);
}

double max_eig_upper_new(std::size_t n, double a)
{
    check_n(n);
    check_a(a);
    // prev - prev * a^(n-1): never rounds above the classic bound.
    const double prev = (1.0 + a) / (1.0 - a);
    return prev - prev * ipow(a, n - 1);
}

double max_eig_lower_new(std::size_t n, double a)
{
    check_n(n);
    check_a(a);
    const double one_minus = 1.0 - a;
    const double geometric = (1.0 - ipow(a, n)) / one_minus; // sum_{k<n} a^k
    return (1.0 + a) / one_minus - (2.0 * a / static_cast<double>(n)) * geometric / one_minus;
}

double min_eig_upper_new(std::size_t n, double a)
{
    check_n(n);
    check_a(a);
    const double one_plus = 1.0 + a;
    const double alternating = (1.0 - ipow(-a, n)) / one_plus;
    return (1.0 - a) / one_plus + (2.0 * a / static_cast<double>(n)) * alternating / one_plus;
}

double max_gap(std::size_t n, double a)
{
    return max_eig_upper_new(n, a) - max_eig_lower_new(n, a);
}

ConditionBounds condition_number_bounds(std::size_t n, double a)
{
    const double min_upper = min_eig_upper_new(n, a);
    const double min_lower = min_eig_lower_prev(a);
    constexpr double tiny = std::numeric_limits<double>::min();
    if (!(min_upper > tiny) || !(min_lower > tiny))
        throw Error(ErrorKind::range, "minimum-eigenvalue bound underflows; condition number bound undefined");
    ConditionBounds out{max_eig_lower_new(n, a) / min_upper, max_eig_upper_new(n, a) / min_lower};
    if (!std::isfinite(out.lower) || !std::isfinite(out.upper))
        throw Error(ErrorKind::range, "condition number bound overflows");
    return out;
}

BoundReport bound_report(std::size_t n, double a, bool with_truth)
{
    BoundReport r;
    r.n = n;
    r.a = a;
    r.max_upper_prev = max_eig_upper_prev(a);
    r.max_upper_new = max_eig_upper_new(n, a);
    r.max_lower_new = max_eig_lower_new(n, a);
    r.min_lower_prev = min_eig_lower_prev(a);
    r.min_upper_new = min_eig_upper_new(n, a);
    r.gap = r.max_upper_new - r.max_lower_new;
    r.condition = condition_number_bounds(n, a);
    if (with_truth) {
        const Spectrum s = hermitian_eigenvalues(build_exponential(n, CorrelationCoefficient::make(a)));
        r.lambda_max_true = s.max();
        r.lambda_min_true = s.min();
    }
    return r;
}

UpaBoundReport upa_bounds(const UpaSpec& spec, bool with_truth)
{
    spec.validate();
    if (spec.n_h < 2)
        throw_domain("n_h", "composed bounds require n_h >= 2");
    if (spec.n_v < 2)
        throw_domain("n_v", "composed bounds require n_v >= 2");

    UpaBoundReport r;
    r.spec = spec;
    r.max_upper_prev = max_eig_upper_prev(spec.a_h) * max_eig_upper_prev(spec.a_v);
    r.max_upper_new = max_eig_upper_new(spec.n_h, spec.a_h) * max_eig_upper_new(spec.n_v, spec.a_v);
    r.max_lower_new = max_eig_lower_new(spec.n_h, spec.a_h) * max_eig_lower_new(spec.n_v, spec.a_v);
    r.min_lower_prev = min_eig_lower_prev(spec.a_h) * min_eig_lower_prev(spec.a_v);
    r.min_upper_new = min_eig_upper_new(spec.n_h, spec.a_h) * min_eig_upper_new(spec.n_v, spec.a_v);
    r.gap = r.max_upper_new - r.max_lower_new;
    if (with_truth) {
        const Spectrum s = hermitian_eigenvalues(build_upa(spec));
        r.lambda_max_true = s.max();
        r.lambda_min_true = s.min();
    }
    return r;
}

} // namespace corrbound

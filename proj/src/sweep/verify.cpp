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
#include "corrbound/format.hpp"
#include "corrbound/sweep.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace corrbound {

namespace {

struct PointOutcome {
    VerifyPoint point;
    std::vector<std::string> violations;
};

PointOutcome check_point(std::size_t n, double a, double tol)
{
    PointOutcome out;
    VerifyPoint& p = out.point;
    p.n = n;
    p.a = a;
    const std::string where = "n=" + std::to_string(n) + " a=" + format_significant(a) + ": ";
    try {
        const double upper_prev = max_eig_upper_prev(a);
        const double upper_new = max_eig_upper_new(n, a);
        const double lower_new = max_eig_lower_new(n, a);
        const double min_lower = min_eig_lower_prev(a);
        const double min_upper = min_eig_upper_new(n, a);

        const Spectrum oracle = hermitian_eigenvalues(build_exponential(n, CorrelationCoefficient::make(a)));
        const Spectrum roots = transcendental_eigenvalues(n, a).spectrum;

        p.lambda_max = oracle.max();
        p.lambda_min = oracle.min();
        p.slack_upper_new = upper_new - p.lambda_max;
        p.slack_upper_prev = upper_prev - p.lambda_max;
        p.slack_lower_new = p.lambda_max - lower_new;
        p.slack_min_lower = p.lambda_min - min_lower;
        p.slack_min_upper = min_upper - p.lambda_min;
        for (std::size_t i = 0; i < n; ++i)
            p.method_deviation = std::max(p.method_deviation, std::abs(oracle.values[i] - roots.values[i]));

        if (p.slack_lower_new < -tol)
            out.violations.push_back(where + "max_eig_lower_new exceeds lambda_max by " +
                                     format_significant(-p.slack_lower_new));
        if (p.slack_upper_new < -tol)
            out.violations.push_back(where + "lambda_max exceeds max_eig_upper_new by " +
                                     format_significant(-p.slack_upper_new));
        if (upper_new > upper_prev + tol)
            out.violations.push_back(where + "max_eig_upper_new exceeds (1+a)/(1-a)");
        if (p.slack_min_lower < -tol)
            out.violations.push_back(where + "(1-a)/(1+a) exceeds lambda_min by " +
                                     format_significant(-p.slack_min_lower));
        if (p.slack_min_upper < -tol)
            out.violations.push_back(where + "lambda_min exceeds min_eig_upper_new by " +
                                     format_significant(-p.slack_min_upper));
        if (p.method_deviation > tol)
            out.violations.push_back(where + "spectrum routes disagree by " + format_significant(p.method_deviation));
    } catch (const std::exception& e) {
        out.violations.push_back(where + e.what());
    }
    return out;
}

} // namespace

VerificationSummary verify_campaign(std::size_t n_max, std::span<const double> a_grid, double tol, std::size_t threads)
{
    if (!(tol >= 0.0))
        throw_domain("tol", "must be non-negative");
    VerificationSummary summary;
    if (n_max < 2) {
        summary.violations.push_back("n_max must be >= 2, got " + std::to_string(n_max));
        return summary;
    }
    const std::size_t per_a = n_max - 1;
    std::vector<PointOutcome> outcomes(per_a * a_grid.size());
    detail::parallel_for(outcomes.size(), threads, [&](std::size_t i) {
        outcomes[i] = check_point(2 + i % per_a, a_grid[i / per_a], tol);
    });

    for (auto& o : outcomes) {
        const VerifyPoint& p = o.point;
        ++summary.points_checked;
        summary.max_slack_upper_new = std::max(summary.max_slack_upper_new, p.slack_upper_new);
        summary.max_slack_upper_prev = std::max(summary.max_slack_upper_prev, p.slack_upper_prev);
        summary.max_slack_lower_new = std::max(summary.max_slack_lower_new, p.slack_lower_new);
        summary.max_slack_min_lower = std::max(summary.max_slack_min_lower, p.slack_min_lower);
        summary.max_slack_min_upper = std::max(summary.max_slack_min_upper, p.slack_min_upper);
        summary.max_method_deviation = std::max(summary.max_method_deviation, p.method_deviation);
        summary.points.push_back(p);
        for (auto& v : o.violations)
            summary.violations.push_back(std::move(v));
    }
    return summary;
}

} // namespace corrbound

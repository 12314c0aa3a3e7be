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
#include "corrbound/sweep.hpp"
#include "parallel.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace corrbound {

SweepConfig SweepConfig::defaults(SweepMode mode)
{
    SweepConfig c;
    c.mode = mode;
    for (std::size_t n = 2; n <= 64; ++n)
        c.n_values.push_back(n);
    c.a_values = {0.3, 0.6, 0.9};
    c.upa_shapes = {{2, 2}, {2, 4}, {4, 4}, {4, 8}, {8, 8}};
    return c;
}

void SweepConfig::validate() const
{
    auto check_a = [](const char* name, double a) {
        if (!std::isfinite(a) || a < 0.0 || a >= 1.0)
            throw_domain(name, "magnitude must lie in [0, 1), got " + std::to_string(a));
    };
    if (mode == SweepMode::upa_max) {
        if (upa_shapes.empty())
            throw_domain("shapes", "UPA shape list is empty");
        for (const auto& [nh, nv] : upa_shapes)
            if (nh < 2 || nv < 2)
                throw_domain("shapes", "every UPA dimension must be >= 2");
        check_a("a-h", a_h);
        check_a("a-v", a_v);
    } else {
        if (n_values.empty())
            throw_domain("n-values", "grid is empty");
        if (a_values.empty())
            throw_domain("a-values", "grid is empty");
        for (std::size_t n : n_values)
            if (n < 2)
                throw_domain("n-values", "every n must be >= 2, got " + std::to_string(n));
        for (double a : a_values)
            check_a("a-values", a);
    }
    if (threads == 0)
        throw_domain("threads", "must be positive");
    if (!(tolerance >= 0.0))
        throw_domain("tol", "must be non-negative");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append(std::string& out, const std::string& what)
{
    if (!out.empty())
        out += "; ";
    out += what;
}

SweepRow ula_row(std::size_t n, double a, const SweepConfig& config)
{
    SweepRow row;
    row.n = n;
    row.a = a;
    row.lambda_max = row.lambda_min = kNaN;
    try {
        const BoundReport bounds = bound_report(n, a, false);
        row.upper_prev = bounds.max_upper_prev;
        row.upper_new = bounds.max_upper_new;
        row.lower_new = bounds.max_lower_new;
        row.min_lower_prev = bounds.min_lower_prev;
        row.min_upper_new = bounds.min_upper_new;
        row.gap = bounds.gap;

        const CorrMatrix r = build_exponential(n, CorrelationCoefficient::make(a));
        const auto start = std::chrono::steady_clock::now();
        const Spectrum oracle = hermitian_eigenvalues(r);
        const auto stop = std::chrono::steady_clock::now();
        if (config.record_timing)
            row.solve_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.lambda_max = oracle.max();
        row.lambda_min = oracle.min();

        const double tol = config.tolerance;
        if (row.lower_new > row.lambda_max + tol)
            append(row.violation, "lower_new>lambda_max");
        if (row.lambda_max > row.upper_new + tol)
            append(row.violation, "lambda_max>upper_new");
        if (row.upper_new > row.upper_prev + tol)
            append(row.violation, "upper_new>upper_prev");
        if (row.min_lower_prev > row.lambda_min + tol)
            append(row.violation, "min_lower_prev>lambda_min");
        if (row.lambda_min > row.min_upper_new + tol)
            append(row.violation, "lambda_min>min_upper_new");

        if (config.mode == SweepMode::verify) {
            const Spectrum other = transcendental_eigenvalues(n, a).spectrum;
            double dev = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dev = std::max(dev, std::abs(other.values[i] - oracle.values[i]));
            if (dev > tol)
                append(row.violation, "method deviation " + std::to_string(dev));
        }
    } catch (const std::exception& e) {
        append(row.violation, std::string("error: ") + e.what());
    }
    return row;
}

SweepRow upa_row(std::size_t nh, std::size_t nv, const SweepConfig& config)
{
    SweepRow row;
    row.upa = true;
    row.n_h = nh;
    row.n_v = nv;
    row.n = nh * nv;
    row.a_h = config.a_h;
    row.a_v = config.a_v;
    row.lambda_max = row.lambda_min = kNaN;
    try {
        const UpaSpec spec{nh, config.a_h, nv, config.a_v};
        const UpaBoundReport b = upa_bounds(spec, false);
        row.upper_prev = b.max_upper_prev;
        row.upper_new = b.max_upper_new;
        row.lower_new = b.max_lower_new;
        row.min_lower_prev = b.min_lower_prev;
        row.min_upper_new = b.min_upper_new;
        row.gap = b.gap;

        const auto start = std::chrono::steady_clock::now();
        const Spectrum oracle = hermitian_eigenvalues(build_upa(spec));
        const auto stop = std::chrono::steady_clock::now();
        if (config.record_timing)
            row.solve_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.lambda_max = oracle.max();
        row.lambda_min = oracle.min();

        const double tol = config.tolerance;
        if (row.lower_new > row.lambda_max + tol)
            append(row.violation, "lower_new>lambda_max");
        if (row.lambda_max > row.upper_new + tol)
            append(row.violation, "lambda_max>upper_new");
        if (row.upper_new > row.upper_prev + tol)
            append(row.violation, "upper_new>upper_prev");
        if (row.min_lower_prev > row.lambda_min + tol)
            append(row.violation, "min_lower_prev>lambda_min");
        if (row.lambda_min > row.min_upper_new + tol)
            append(row.violation, "lambda_min>min_upper_new");
    } catch (const std::exception& e) {
        append(row.violation, std::string("error: ") + e.what());
    }
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config)
{
    config.validate();
    std::vector<SweepRow> rows;
    if (config.mode == SweepMode::upa_max) {
        rows.resize(config.upa_shapes.size());
        detail::parallel_for(rows.size(), config.threads, [&](std::size_t i) {
            rows[i] = upa_row(config.upa_shapes[i].first, config.upa_shapes[i].second, config);
        });
        return rows;
    }

    const std::size_t per_a = config.n_values.size();
    rows.resize(per_a * config.a_values.size());
    detail::parallel_for(rows.size(), config.threads, [&](std::size_t i) {
        rows[i] = ula_row(config.n_values[i % per_a], config.a_values[i / per_a], config);
    });
    return rows;
}

} // namespace corrbound

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

#include "corrbound/error.hpp"
#include "corrbound/format.hpp"
#include "corrbound/sweep.hpp"
#include "write_file.hpp"

#include <algorithm>
#include <string>

namespace corrbound {

namespace {

constexpr const char* kUlaHeader =
    "n,a,lambda_max,lambda_min,upper_prev,upper_new,lower_new,min_lower_prev,min_upper_new,gap,solve_ms,violation";
constexpr const char* kUpaHeader = "n_h,n_v,a_h,a_v,lambda_max,upper_prev,upper_new,lower_new,violation";

// Violation text never contains the field separator.
std::string field_safe(std::string s)
{
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

std::string render_csv(std::span<const SweepRow> rows, SweepMode mode)
{
    if (rows.empty())
        throw_domain("rows", "nothing to write");

    const auto f = [](double v) { return format_significant(v); };
    std::string out;
    if (mode == SweepMode::upa_max) {
        out += kUpaHeader;
        out += '\n';
        for (const auto& r : rows) {
            out += std::to_string(r.n_h) + ',' + std::to_string(r.n_v) + ',' + f(r.a_h) + ',' + f(r.a_v) + ',' +
                   f(r.lambda_max) + ',' + f(r.upper_prev) + ',' + f(r.upper_new) + ',' + f(r.lower_new) + ',' +
                   field_safe(r.violation) + '\n';
        }
        return out;
    }

    out += kUlaHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + f(r.a) + ',' + f(r.lambda_max) + ',' + f(r.lambda_min) + ',' +
               f(r.upper_prev) + ',' + f(r.upper_new) + ',' + f(r.lower_new) + ',' + f(r.min_lower_prev) + ',' +
               f(r.min_upper_new) + ',' + f(r.gap) + ',' + (r.solve_ms ? f(*r.solve_ms) : std::string()) + ',' +
               field_safe(r.violation) + '\n';
    }
    return out;
}

void emit_csv(std::span<const SweepRow> rows, SweepMode mode, const std::filesystem::path& path)
{
    detail::write_file_atomic(path, render_csv(rows, mode));
}

} // namespace corrbound

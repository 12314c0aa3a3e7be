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

#ifndef CORRBOUND_SWEEP_HPP
#define CORRBOUND_SWEEP_HPP

// Parameter sweeps over (n, a) grids and UPA shapes, bound-verification
// campaigns, and their CSV/SVG artifacts.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corrbound {

enum class SweepMode { ula_max, ula_min, upa_max, verify };

std::string_view to_string(SweepMode mode) noexcept;

/// Accepts "ula-max", "ula-min", "upa-max", "verify"; Error(domain) otherwise.
SweepMode parse_sweep_mode(std::string_view text);

// ---------------------------------------------------------------------------
// Grid syntax
//   integers: "2:64" (step 1), "2:1024:2", or "2,4,8"
//   reals:    "0.1:0.9:0.1" or "0.3,0.6,0.9"
//   shapes:   "2x2,2x4,4x4"
// Real ranges are generated as lo + i*step and rounded to 12 decimals, so
// "0.1:0.9:0.1" yields exactly the doubles nearest 0.1, 0.2, ..., 0.9.
// ---------------------------------------------------------------------------

std::vector<std::size_t> parse_int_grid(std::string_view text);
std::vector<double> parse_real_grid(std::string_view text);
std::vector<std::pair<std::size_t, std::size_t>> parse_shape_list(std::string_view text);

/// Worker count from CORRBOUND_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
std::size_t default_parallelism();

struct SweepConfig {
    SweepMode mode = SweepMode::ula_max;
    std::vector<std::size_t> n_values;
    std::vector<double> a_values;
    std::vector<std::pair<std::size_t, std::size_t>> upa_shapes; // (n_h, n_v)
    double a_h = 0.6;
    double a_v = 0.9;
    std::filesystem::path csv_path;
    std::filesystem::path svg_path;
    std::size_t threads = 1;
    bool record_timing = false; // off keeps CSV output byte-reproducible
    double tolerance = 1e-9;

    /// n = 2..64, a in {0.3, 0.6, 0.9}, shapes {2x2, 2x4, 4x4, 4x8, 8x8},
    /// (a_h, a_v) = (0.6, 0.9).
    static SweepConfig defaults(SweepMode mode);

    /// Error(domain) naming the offending field.
    void validate() const;
};

struct SweepRow {
    bool upa = false;
    std::size_t n = 0; // ULA size, or n_h * n_v for UPA rows
    double a = 0.0;
    std::size_t n_h = 0;
    std::size_t n_v = 0;
    double a_h = 0.0;
    double a_v = 0.0;
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double upper_prev = 0.0;
    double upper_new = 0.0;
    double lower_new = 0.0;
    double min_lower_prev = 0.0;
    double min_upper_new = 0.0;
    double gap = 0.0;
    std::optional<double> solve_ms;
    std::string violation; // empty when every check passed
};

/// One row per grid point, ordered by a then n (ULA modes) or in shape-list
/// order (upa-max). Points are evaluated on `threads` workers; the result does
/// not depend on the worker count. Failures at a point are recorded in that
/// row's violation field.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV text in the schema for `mode`. Error(domain) on empty rows.
std::string render_csv(std::span<const SweepRow> rows, SweepMode mode);
/// Error(domain) on empty rows, Error(io) when the file cannot be written.
void emit_csv(std::span<const SweepRow> rows, SweepMode mode, const std::filesystem::path& path);

/// Line chart with a log10 eigenvalue axis, one polyline per (curve, a).
std::string render_svg(std::span<const SweepRow> rows, SweepMode mode);
void emit_svg(std::span<const SweepRow> rows, SweepMode mode, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Verification campaign
// ---------------------------------------------------------------------------

struct VerifyPoint {
    std::size_t n = 0;
    double a = 0.0;
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double slack_upper_new = 0.0;  // upper_new - lambda_max
    double slack_upper_prev = 0.0; // upper_prev - lambda_max
    double slack_lower_new = 0.0;  // lambda_max - lower_new
    double slack_min_lower = 0.0;  // lambda_min - min_lower_prev
    double slack_min_upper = 0.0;  // min_upper_new - lambda_min
    double method_deviation = 0.0; // max |oracle - characteristic-equation| eigenvalue
};

struct VerificationSummary {
    std::size_t points_checked = 0;
    double max_slack_upper_new = 0.0;
    double max_slack_upper_prev = 0.0;
    double max_slack_lower_new = 0.0;
    double max_slack_min_lower = 0.0;
    double max_slack_min_upper = 0.0;
    double max_method_deviation = 0.0;
    std::vector<VerifyPoint> points; // ordered by a then n
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks both sandwiches, the improvement over (1+a)/(1-a), and agreement of
/// the two spectrum routes for every n in [2, n_max] and a in a_grid.
/// Violations are collected, never thrown.
VerificationSummary verify_campaign(std::size_t n_max, std::span<const double> a_grid, double tol,
                                    std::size_t threads = 1);

} // namespace corrbound

#endif

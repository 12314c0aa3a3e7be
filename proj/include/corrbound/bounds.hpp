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

#ifndef CORRBOUND_BOUNDS_HPP
#define CORRBOUND_BOUNDS_HPP

// Closed-form bounds on the extreme eigenvalues of the n x n exponential-model
// correlation matrix with real coefficient a.
//
// Every function validates its inputs: a outside [0, 1) or a dimension below
// the formula's minimum raises Error(domain); a > 1 - 1e-8 raises
// Error(range) because the bounds blow up like 1/(1-a).

#include "corrbound/corrmat.hpp"

#include <cstddef>
#include <optional>

namespace corrbound {

inline constexpr double kNearOneCutoff = 1e-8;

/// x^k by repeated squaring.
double ipow(double x, std::size_t k) noexcept;

/// (1+a)/(1-a): n-independent upper bound on lambda_max.
double max_eig_upper_prev(double a);

/// (1-a)/(1+a): n-independent lower bound on lambda_min.
double min_eig_lower_prev(double a);

/// (1+a)(1-a^(n-1))/(1-a), the top eigenvalue of the 2(n-1) circulant
/// expansion. Requires n >= 2.
double max_eig_upper_new(std::size_t n, double a);

/// (1+a)/(1-a) - 2a(1-a^n)/(n(1-a)^2), the all-ones Rayleigh quotient.
/// Requires n >= 2.
double max_eig_lower_new(std::size_t n, double a);

/// (1-a)/(1+a) + 2a(1-(-a)^n)/(n(1+a)^2), the alternating-sign Rayleigh
/// quotient. Requires n >= 2.
double min_eig_upper_new(std::size_t n, double a);

/// max_eig_upper_new - max_eig_lower_new.
double max_gap(std::size_t n, double a);

struct ConditionBounds {
    double lower;
    double upper;
};

/// lower = max_eig_lower_new / min_eig_upper_new,
/// upper = max_eig_upper_new / min_eig_lower_prev.
ConditionBounds condition_number_bounds(std::size_t n, double a);

struct BoundReport {
    std::size_t n = 0;
    double a = 0.0;
    double max_upper_prev = 0.0;
    double max_upper_new = 0.0;
    double max_lower_new = 0.0;
    double min_lower_prev = 0.0;
    double min_upper_new = 0.0;
    double gap = 0.0;
    ConditionBounds condition{};
    std::optional<double> lambda_max_true;
    std::optional<double> lambda_min_true;
};

/// All bounds for (n, a); with_truth attaches oracle extremes.
BoundReport bound_report(std::size_t n, double a, bool with_truth = true);

/// Bounds composed for R_h (x) R_v by multiplying the factor bounds.
struct UpaBoundReport {
    UpaSpec spec;
    double max_upper_prev = 0.0;
    double max_upper_new = 0.0;
    double max_lower_new = 0.0;
    double min_lower_prev = 0.0;
    double min_upper_new = 0.0;
    double gap = 0.0; // max_upper_new - max_lower_new of the composed bounds
    std::optional<double> lambda_max_true;
    std::optional<double> lambda_min_true;
};

/// Requires n_h >= 2 and n_v >= 2. with_truth runs the dense oracle on
/// build_upa(spec).
UpaBoundReport upa_bounds(const UpaSpec& spec, bool with_truth = true);

} // namespace corrbound

#endif

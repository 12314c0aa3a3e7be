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

// Spectrum of the exponential-model matrix from the roots of its
// characteristic equation.
//
// Every eigenvalue has the form (1-a^2)/(1+a^2+2a cos phi) with phi in
// (0, pi). The map phi -> lambda is increasing, so ascending roots give
// ascending eigenvalues. g(phi) has known one-sided signs at the interval
// ends (+ at 0+, (-1)^n at pi-), which lets the scan catch roots sitting
// inside the first or last grid cell.

#include "corrbound/eigensolve.hpp"
#include "corrbound/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace corrbound {

double eigenvalue_from_phase(double a, double phi)
{
    const double half = std::cos(0.5 * phi);
    const double one_minus_a = 1.0 - a;
    return (1.0 - a) * (1.0 + a) / (one_minus_a * one_minus_a + 4.0 * a * half * half);
}

double characteristic_residual(std::size_t n, double a, double phi)
{
    const double denom = (1.0 - a) * (1.0 + a);
    const double c1 = (1.0 + a * a) / denom;
    const double c2 = 2.0 * a / denom;
    const double nphi = static_cast<double>(n) * phi;
    return std::sin(nphi) * (c1 * std::cos(phi) + c2) + std::cos(nphi) * std::sin(phi);
}

namespace {

int sign_of(double x)
{
    return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0);
}

// Bisects [lo, hi] where sign(g(lo)) == lo_sign != sign(g(hi)) until the
// midpoint coincides with an endpoint.
double bisect(std::size_t n, double a, double lo, double hi, int lo_sign)
{
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const int s = sign_of(characteristic_residual(n, a, mid));
        if (s == 0)
            return mid;
        if (s == lo_sign)
            lo = mid;
        else
            hi = mid;
    }
    // g vanishes at 0 and pi themselves; never return those.
    if (lo == 0.0)
        return hi;
    if (hi == std::numbers::pi)
        return lo;
    return std::abs(characteristic_residual(n, a, lo)) <= std::abs(characteristic_residual(n, a, hi)) ? lo : hi;
}

// Brackets of sign changes of g over a uniform grid of `cells` cells on [0, pi].
std::vector<std::pair<double, double>> scan(std::size_t n, double a, std::size_t cells)
{
    std::vector<std::pair<double, double>> brackets;
    const double step = std::numbers::pi / static_cast<double>(cells);
    double prev_phi = 0.0;
    int prev_sign = 1;
    for (std::size_t k = 1; k <= cells; ++k) {
        const double phi = k == cells ? std::numbers::pi : static_cast<double>(k) * step;
        const int s = k == cells ? (n % 2 == 0 ? 1 : -1) : sign_of(characteristic_residual(n, a, phi));
        if (s == 0) {
            // Exact zero on a grid node: record a degenerate bracket and
            // carry the sign just past the node.
            brackets.emplace_back(phi, phi);
            prev_phi = phi;
            prev_sign = -prev_sign;
            continue;
        }
        if (s != prev_sign)
            brackets.emplace_back(prev_phi, phi);
        prev_phi = phi;
        prev_sign = s;
    }
    return brackets;
}

} // namespace

TranscendentalResult transcendental_eigenvalues(std::size_t n, double a, const RootScanOptions& options)
{
    if (n < 2)
        throw_domain("n", "characteristic-equation route needs n >= 2");
    if (!std::isfinite(a) || a < 0.0 || a >= 1.0)
        throw_domain("a", "magnitude must lie in [0, 1)");

    TranscendentalResult result;
    if (a == 0.0) {
        result.spectrum.values.assign(n, 1.0);
        return result;
    }

    std::size_t cells = std::max<std::size_t>(options.points_per_root, 2) * n;
    std::vector<std::pair<double, double>> brackets = scan(n, a, cells);
    for (int refine = 0; brackets.size() != n && refine < options.max_refinements; ++refine) {
        cells *= 2;
        brackets = scan(n, a, cells);
    }
    if (brackets.size() != n)
        throw Error(ErrorKind::root_isolation, "found " + std::to_string(brackets.size()) + " sign changes for n = " +
                                                   std::to_string(n) + ", a = " + std::to_string(a) + " on " +
                                                   std::to_string(cells) + " cells");

    result.roots.phis.reserve(n);
    for (const auto& [lo, hi] : brackets) {
        if (lo == hi) {
            result.roots.phis.push_back(lo);
            continue;
        }
        // Sign at lo is the left virtual sign (+) when lo == 0.
        const int lo_sign = lo == 0.0 ? 1 : sign_of(characteristic_residual(n, a, lo));
        result.roots.phis.push_back(bisect(n, a, lo, hi, lo_sign));
    }
    std::sort(result.roots.phis.begin(), result.roots.phis.end());

    result.spectrum.values.reserve(n);
    for (auto it = result.roots.phis.rbegin(); it != result.roots.phis.rend(); ++it)
        result.spectrum.values.push_back(eigenvalue_from_phase(a, *it));
    return result;
}

} // namespace corrbound

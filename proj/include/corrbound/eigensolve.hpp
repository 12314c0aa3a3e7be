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

#ifndef CORRBOUND_EIGENSOLVE_HPP
#define CORRBOUND_EIGENSOLVE_HPP

#include "corrbound/corrmat.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace corrbound {

/// Real eigenvalues of a Hermitian matrix, largest first.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double max() const { return values.front(); }
    double min() const { return values.back(); }
    double sum() const;
    double product() const;
};

/// Roots phi_i in (0, pi) of the characteristic equation, ascending.
struct PhaseRoots {
    std::vector<double> phis;
};

struct TranscendentalResult {
    Spectrum spectrum;
    PhaseRoots roots;
};

/// Eigenvalues and orthonormal eigenvectors; vectors[k] belongs to values[k].
struct EigenDecomposition {
    Spectrum spectrum;
    std::vector<std::vector<cdouble>> vectors;
};

// ---------------------------------------------------------------------------
// Dense oracle
// ---------------------------------------------------------------------------

/// All eigenvalues via Householder tridiagonalization and implicit-shift QL.
///
/// Real matrices take the real path (SIMD kernels); anything with a nonzero
/// imaginary part goes through complex Householder reflections and is then
/// diagonally rescaled to a real tridiagonal. Diagonal input short-circuits
/// to its sorted diagonal. Throws NumericalError when QL needs more than
/// 30*n shifts.
Spectrum hermitian_eigenvalues(const CorrMatrix& matrix);

/// Same solver with eigenvector accumulation. O(n^3) in extra work; meant
/// for modest n (sampling, tests).
EigenDecomposition hermitian_eigen(const CorrMatrix& matrix);

// ---------------------------------------------------------------------------
// Characteristic-equation route
// ---------------------------------------------------------------------------

/// lambda = (1 - a^2) / (1 + a^2 + 2a cos(phi)), evaluated as
/// (1 - a^2) / ((1 - a)^2 + 4a cos^2(phi/2)) to avoid cancellation near pi.
double eigenvalue_from_phase(double a, double phi);

/// g(phi) = sin(n phi) [c1 cos(phi) + c2] + cos(n phi) sin(phi) with
/// c1 = (1+a^2)/(1-a^2), c2 = 2a/(1-a^2). Pole-free product form of
/// tan(n phi) = -sin(phi) / (c1 cos(phi) + c2).
double characteristic_residual(std::size_t n, double a, double phi);

struct RootScanOptions {
    std::size_t points_per_root = 64; // initial grid: points_per_root * n cells
    int max_refinements = 4;          // grid doublings before giving up
};

/// Exact spectrum of build_exponential(n, a) from the n roots of g on (0, pi).
///
/// Roots are bracketed on a uniform grid and bisected until the bracket can
/// no longer shrink in double precision. a = 0 returns the all-ones spectrum
/// with no roots. Throws Error(domain) for n < 2 or a outside [0, 1),
/// Error(root_isolation) when the sign-change count stays != n after all
/// refinements.
TranscendentalResult transcendental_eigenvalues(std::size_t n, double a,
                                                const RootScanOptions& options = {});

// ---------------------------------------------------------------------------
// Circulant and Rayleigh
// ---------------------------------------------------------------------------

/// Eigenvalues of the circulant matrix with the given first row, by direct
/// DFT summation. The row must describe a Hermitian circulant
/// (first_row[m-j] == conj(first_row[j]) within 1e-12), otherwise
/// Error(domain).
Spectrum circulant_eigenvalues(std::span<const cdouble> first_row);

/// f^H R f / f^H f. Throws Error(domain) for a zero vector or a size mismatch.
double rayleigh_quotient(const CorrMatrix& matrix, std::span<const cdouble> vector);

/// Real-vector overload.
double rayleigh_quotient(const CorrMatrix& matrix, std::span<const double> vector);

} // namespace corrbound

#endif

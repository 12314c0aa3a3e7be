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

#ifndef CORRBOUND_CORRMAT_HPP
#define CORRBOUND_CORRMAT_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace corrbound {

using cdouble = std::complex<double>;

/// Correlation coefficient r = a * exp(j * theta) of the exponential model.
///
/// The magnitude a lies in [0, 1); theta is stored reduced to [0, 2*pi).
/// Only the magnitude affects the spectrum of the resulting matrix.
class CorrelationCoefficient {
public:
    /// Throws Error(domain) naming "a" when a is not finite or outside [0, 1),
    /// and naming "theta" when theta is not finite.
    static CorrelationCoefficient make(double a, double theta = 0.0);

    double magnitude() const noexcept { return a_; }
    double phase() const noexcept { return theta_; }
    bool is_real() const noexcept { return theta_ == 0.0; }
    cdouble value() const noexcept { return std::polar(a_, theta_); }

    /// r^k for k >= 0, computed as a^k * exp(j * k * theta) with the angle
    /// reduced modulo 2*pi.
    cdouble power(std::size_t k) const;

private:
    CorrelationCoefficient(double a, double theta) : a_(a), theta_(theta) {}
    double a_;
    double theta_;
};

enum class MatrixTag { exponential, circulant_expansion, kronecker, generic_hermitian };

std::string_view to_string(MatrixTag tag) noexcept;

/// Dense Hermitian matrix in row-major order.
///
/// Instances are immutable once built. Hermitian symmetry holds exactly
/// (entry(j, i) is the bitwise conjugate of entry(i, j)); the builders below
/// also guarantee a unit diagonal.
class CorrMatrix {
public:
    /// Wraps caller-supplied entries as a generic Hermitian matrix. Entries
    /// must be Hermitian to within 1e-12 of the largest magnitude; the upper
    /// triangle is then overwritten with the conjugated lower triangle.
    static CorrMatrix from_entries(std::size_t n, std::vector<cdouble> entries,
                                   MatrixTag tag = MatrixTag::generic_hermitian);

    std::size_t size() const noexcept { return n_; }
    MatrixTag tag() const noexcept { return tag_; }
    const cdouble& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
    std::span<const cdouble> entries() const noexcept { return entries_; }
    std::span<const cdouble> row(std::size_t i) const noexcept { return {entries_.data() + i * n_, n_}; }

    /// True when every imaginary part is exactly zero.
    bool is_real() const noexcept { return real_; }

    /// Real parts, row-major. Meaningful when is_real().
    std::vector<double> real_entries() const;

private:
    CorrMatrix(std::size_t n, std::vector<cdouble> entries, MatrixTag tag);
    std::size_t n_ = 0;
    std::vector<cdouble> entries_;
    MatrixTag tag_ = MatrixTag::generic_hermitian;
    bool real_ = true;

    friend CorrMatrix build_exponential(std::size_t, const CorrelationCoefficient&);
    friend CorrMatrix build_circulant_expansion(std::size_t, double);
    friend CorrMatrix kronecker(const CorrMatrix&, const CorrMatrix&, std::size_t);
};

struct UpaSpec {
    std::size_t n_h = 1;
    double a_h = 0.0;
    std::size_t n_v = 1;
    double a_v = 0.0;

    /// Throws Error(domain) naming the first invalid field.
    void validate() const;
};

inline constexpr std::size_t kDefaultUpaDimensionCap = 16384;

/// Exponential-model (Kac-Murdock-Szego) matrix: entry(i, j) = r^(i-j) for
/// i >= j, conjugate above the diagonal.
CorrMatrix build_exponential(std::size_t n, const CorrelationCoefficient& r);

/// Circulant matrix of size 2(n-1) with first row [1, a, ..., a^(n-1), a^(n-2), ..., a].
/// Its leading n x n block is build_exponential(n, a). Requires n >= 2.
CorrMatrix build_circulant_expansion(std::size_t n, double a);

/// First row of build_circulant_expansion(n, a) without forming the matrix.
std::vector<cdouble> circulant_expansion_row(std::size_t n, double a);

/// Kronecker product lhs (x) rhs, tagged kronecker. Throws Error(size) when
/// the product dimension exceeds `cap`.
CorrMatrix kronecker(const CorrMatrix& lhs, const CorrMatrix& rhs,
                     std::size_t cap = kDefaultUpaDimensionCap);

/// R_h (x) R_v for a uniform planar array.
CorrMatrix build_upa(const UpaSpec& spec, std::size_t cap = kDefaultUpaDimensionCap);

/// Draws `count` vectors h = R^(1/2) h_w with h_w ~ CN(0, I).
///
/// R^(1/2) comes from the eigendecomposition of R; eigenvalues in
/// [-1e-10 * lambda_max, 0) are clamped to zero, anything more negative raises
/// Error(not_psd). The generator is std::mt19937_64 seeded with `seed`, with
/// std::normal_distribution supplying the real and imaginary parts (variance
/// 1/2 each). Output is reproducible for a given standard library.
std::vector<std::vector<cdouble>> sample_correlated(const CorrMatrix& matrix, std::size_t count,
                                                    std::uint64_t seed);

/// Hermitian square root used by sample_correlated, exposed for testing.
CorrMatrix psd_sqrt(const CorrMatrix& matrix);

inline constexpr double kPsdClampTolerance = 1e-10;

} // namespace corrbound

#endif

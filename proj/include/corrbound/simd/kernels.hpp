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

#ifndef CORRBOUND_SIMD_KERNELS_HPP
#define CORRBOUND_SIMD_KERNELS_HPP

// Data-parallel inner loops of the dense eigensolver and the circulant DFT.
//
// Every kernel has a scalar reference implementation; AVX2+FMA (x86-64) and
// NEON (aarch64) variants are compiled into separate translation units and
// picked at runtime from the CPU feature set. The variants are allowed to
// differ from the reference only by reassociation and fused rounding.
//
// Selection order: CORRBOUND_ISA environment variable ("scalar", "avx2",
// "neon") if set and supported, else the widest supported ISA.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace corrbound::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
    Isa isa;

    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);

    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

    // row[i] -= alpha * x[i] + beta * y[i]   (symmetric rank-2 update, one row)
    void (*rank2_row)(double* row, double alpha, const double* x, double beta, const double* y,
                      std::size_t n);

    // sum_i x[i]^2
    double (*sum_squares)(const double* x, std::size_t n);
};

bool supported(Isa isa) noexcept;

// Table for a specific ISA; throws corrbound::Error(domain) if unsupported.
const KernelTable& table(Isa isa);

// Table used by the library.
const KernelTable& active() noexcept;

// Override the active table (tests, benchmarks). Not thread-safe with respect
// to concurrent kernel calls; set it before starting work.
void set_active(Isa isa);

/// Restores the previously active ISA on scope exit.
class ScopedIsa {
public:
    explicit ScopedIsa(Isa isa);
    ~ScopedIsa();
    ScopedIsa(const ScopedIsa&) = delete;
    ScopedIsa& operator=(const ScopedIsa&) = delete;

private:
    Isa previous_;
};

std::vector<Isa> available_isas();

// Convenience wrappers over active().
inline double dot(std::span<const double> x, std::span<const double> y)
{
    return active().dot(x.data(), y.data(), x.size());
}

inline double sum_squares(std::span<const double> x)
{
    return active().sum_squares(x.data(), x.size());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(CORRBOUND_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(CORRBOUND_HAVE_NEON)
extern const KernelTable neon_table;
#endif
} // namespace detail

} // namespace corrbound::simd

#endif

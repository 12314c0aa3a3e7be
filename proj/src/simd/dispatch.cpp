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
#include "corrbound/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace corrbound::simd {

std::string_view to_string(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(CORRBOUND_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::neon:
#if defined(CORRBOUND_HAVE_NEON)
        return true; // mandatory on AArch64
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa)
{
    if (!supported(isa))
        throw Error(ErrorKind::domain, "ISA " + std::string(to_string(isa)) + " not supported on this CPU/build");
    switch (isa) {
#if defined(CORRBOUND_HAVE_AVX2)
    case Isa::avx2: return detail::avx2_table;
#endif
#if defined(CORRBOUND_HAVE_NEON)
    case Isa::neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
    }
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (supported(isa))
            out.push_back(isa);
    return out;
}

namespace {

const KernelTable* detect()
{
    if (const char* env = std::getenv("CORRBOUND_ISA")) {
        const std::string_view want(env);
        for (Isa isa : available_isas())
            if (want == to_string(isa))
                return &table(isa);
    }
    if (supported(Isa::avx2))
        return &table(Isa::avx2);
    if (supported(Isa::neon))
        return &table(Isa::neon);
    return &detail::scalar_table;
}

std::atomic<const KernelTable*>& slot()
{
    static std::atomic<const KernelTable*> current{detect()};
    return current;
}

} // namespace

const KernelTable& active() noexcept
{
    return *slot().load(std::memory_order_acquire);
}

void set_active(Isa isa)
{
    slot().store(&table(isa), std::memory_order_release);
}

ScopedIsa::ScopedIsa(Isa isa) : previous_(active().isa)
{
    set_active(isa);
}

ScopedIsa::~ScopedIsa()
{
    set_active(previous_);
}

} // namespace corrbound::simd

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

#ifndef CORRBOUND_SRC_TRIDIAGONAL_HPP
#define CORRBOUND_SRC_TRIDIAGONAL_HPP

#include "corrbound/corrmat.hpp"

#include <cstddef>
#include <vector>

namespace corrbound::detail {

// Real symmetric tridiagonal: diag[0..n), offdiag[0..n-1) (offdiag[i] couples
// i and i+1), all offdiag entries >= 0.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

// Householder reflectors H_k = I - tau_k v_k v_k^H acting on rows/cols k+1..n-1,
// plus the unit phases that map the (possibly complex) tridiagonal to a real one.
template <typename T>
struct Reflectors {
    std::vector<std::vector<T>> v;
    std::vector<double> tau;
    std::vector<cdouble> phase;
};

// Reduces the full row-major Hermitian matrix `a` (destroyed) to real
// tridiagonal form with unitary similarity A = Q D T D^H Q^H.
Tridiagonal tridiagonalize(std::vector<double>& a, std::size_t n, Reflectors<double>* reflectors);
Tridiagonal tridiagonalize(std::vector<cdouble>& a, std::size_t n, Reflectors<cdouble>* reflectors);

// Implicit-shift QL on a real symmetric tridiagonal. On return `t.diag` holds
// the (unsorted) eigenvalues. If `z` is non-null it must hold an n x n
// row-major matrix; it is post-multiplied by the accumulated rotations.
// Throws NumericalError after 30*n shifts in total.
void tridiagonal_ql(Tridiagonal& t, std::vector<double>* z);

} // namespace corrbound::detail

#endif

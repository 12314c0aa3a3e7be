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

#include "tridiagonal.hpp"

#include "corrbound/error.hpp"
#include "corrbound/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corrbound::detail {

namespace {

// Scalar-type specific pieces of the reduction. The real overloads route
// through the SIMD kernel table; the complex ones are plain loops.

double conj_of(double x) { return x; }
cdouble conj_of(const cdouble& z) { return std::conj(z); }
double abs2(double x) { return x * x; }
double abs2(const cdouble& z) { return std::norm(z); }

double row_dot(const double* row, const double* v, std::size_t m)
{
    return simd::active().dot(row, v, m);
}

cdouble row_dot(const cdouble* row, const cdouble* v, std::size_t m)
{
    cdouble acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        acc += row[j] * v[j];
    return acc;
}

double squared_norm(const double* x, std::size_t m)
{
    return simd::active().sum_squares(x, m);
}

double squared_norm(const cdouble* x, std::size_t m)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        acc += std::norm(x[j]);
    return acc;
}

// row -= alpha * x_conj + beta * y_conj, where the caller passes already
// conjugated x/y.
void rank2_update(double* row, double alpha, const double* xc, double beta, const double* yc, std::size_t m)
{
    simd::active().rank2_row(row, alpha, xc, beta, yc, m);
}

void rank2_update(cdouble* row, cdouble alpha, const cdouble* xc, cdouble beta, const cdouble* yc, std::size_t m)
{
    for (std::size_t j = 0; j < m; ++j)
        row[j] -= alpha * xc[j] + beta * yc[j];
}

double unit_phase(double x) { return x < 0.0 ? -1.0 : 1.0; }
cdouble unit_phase(const cdouble& z)
{
    const double r = std::abs(z);
    return r == 0.0 ? cdouble(1.0, 0.0) : z / r;
}

template <typename T>
Tridiagonal reduce(std::vector<T>& a, std::size_t n, Reflectors<T>* reflectors)
{
    Tridiagonal t;
    t.diag.assign(n, 0.0);
    t.offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
    std::vector<T> sub(n > 0 ? n - 1 : 0);

    std::vector<T> v(n), vc(n), p(n), wc(n);
    if (reflectors) {
        reflectors->v.clear();
        reflectors->tau.clear();
    }

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        // Column k below the diagonal equals the conjugate of row k right of it.
        const T* rowk = a.data() + k * n + k + 1;
        for (std::size_t i = 0; i < m; ++i)
            v[i] = conj_of(rowk[i]);

        const double tail = squared_norm(v.data() + 1, m - 1);
        double tau = 0.0;
        if (tail == 0.0) {
            sub[k] = v[0];
        } else {
            const double norm = std::sqrt(abs2(v[0]) + tail);
            const T alpha = -unit_phase(v[0]) * norm;
            v[0] -= alpha;
            tau = 2.0 / (abs2(v[0]) + tail);
            sub[k] = alpha;

            T* trailing = a.data() + (k + 1) * n + (k + 1);
            // p = tau * B v
            for (std::size_t i = 0; i < m; ++i)
                p[i] = tau * row_dot(trailing + i * n, v.data(), m);
            // w = p - (tau/2)(v^H p) v
            T vhp = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                vhp += conj_of(v[i]) * p[i];
            const double half_k = 0.5 * tau * std::real(vhp);
            for (std::size_t i = 0; i < m; ++i) {
                wc[i] = conj_of(p[i] - half_k * v[i]);
                vc[i] = conj_of(v[i]);
            }
            // B -= v w^H + w v^H, row by row
            for (std::size_t i = 0; i < m; ++i)
                rank2_update(trailing + i * n, v[i], wc.data(), conj_of(wc[i]), vc.data(), m);
        }
        t.diag[k] = std::real(a[k * n + k]);
        if (reflectors) {
            reflectors->v.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
            reflectors->tau.push_back(tau);
        }
    }
    if (n >= 2) {
        t.diag[n - 2] = std::real(a[(n - 2) * n + (n - 2)]);
        sub[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    if (n >= 1)
        t.diag[n - 1] = std::real(a[(n - 1) * n + (n - 1)]);

    // D = diag(phase) with conj(D[k+1]) sub[k] D[k] = |sub[k]|.
    std::vector<cdouble> phase(n, cdouble(1.0, 0.0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        t.offdiag[k] = std::sqrt(abs2(sub[k]));
        phase[k + 1] = phase[k] * cdouble(unit_phase(sub[k]));
    }
    if (reflectors)
        reflectors->phase = std::move(phase);
    return t;
}

} // namespace

Tridiagonal tridiagonalize(std::vector<double>& a, std::size_t n, Reflectors<double>* reflectors)
{
    return reduce(a, n, reflectors);
}

Tridiagonal tridiagonalize(std::vector<cdouble>& a, std::size_t n, Reflectors<cdouble>* reflectors)
{
    return reduce(a, n, reflectors);
}

void tridiagonal_ql(Tridiagonal& t, std::vector<double>* z)
{
    std::vector<double>& d = t.diag;
    const std::size_t n = d.size();
    if (n <= 1)
        return;
    std::vector<double> e(n, 0.0);
    std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const std::size_t cap = 30 * n;
    std::size_t shifts = 0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m == l)
                break;
            if (++shifts > cap) {
                double residual = 0.0;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    residual = std::max(residual, std::abs(e[i]));
                throw NumericalError("implicit QL did not converge within " + std::to_string(cap) + " shifts",
                                     residual);
            }

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(m) - 1; i >= static_cast<std::ptrdiff_t>(l); --i) {
                const auto iu = static_cast<std::size_t>(i);
                const double f = s * e[iu];
                const double b = c * e[iu];
                r = std::hypot(f, g);
                e[iu + 1] = r;
                if (r == 0.0) {
                    d[iu + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[iu + 1] - p;
                r = (d[iu] - g) * s + 2.0 * c * b;
                p = s * r;
                d[iu + 1] = g + p;
                g = c * r - b;
                if (z) {
                    double* zz = z->data();
                    for (std::size_t k = 0; k < n; ++k) {
                        const double fz = zz[k * n + iu + 1];
                        zz[k * n + iu + 1] = s * zz[k * n + iu] + c * fz;
                        zz[k * n + iu] = c * zz[k * n + iu] - s * fz;
                    }
                }
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

} // namespace corrbound::detail

// SPDX-License-Identifier: Apache-2.0
//
// hapsim: air-to-air HAP channel and beamforming simulator
// Copyright (C) 2026 hapsim contributors
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

#pragma once

#include "hapsim/channel.hpp"
#include "hapsim/link.hpp"
#include "hapsim/random.hpp"

namespace hapsim::testing {

// Random Hermitian PSD matrix of size n with trace close to scale * n.
inline CMatrix random_psd(int n, RandomStream &rng, double scale = 1.0)
{
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            a(i, k) = rng.complex_normal();
    return scale * (a * a.adjoint()) / static_cast<double>(n);
}

// Synthetic tap correlations: each tap gets its own PSD matrix over time samples.
inline channel::TapCorrelation random_tap_correlation(int n_c, int v, RandomStream &rng)
{
    channel::TapCorrelation c;
    for (int l = 0; l < v; ++l)
        c.per_tap.push_back(random_psd(n_c, rng, 1.0 / v));
    return c;
}

// Interference covariance at carrier j by direct expansion of
// E[sum_{p,q != j} H(j,p) X(p) X(q)^H H(j,q)^H] over independent element taps,
// with E[h_ab(r1,l1) h_a'b'(r2,l2)^*] = [a=a'][b=b'][l1=l2] R_l(r1, r2).
inline CMatrix brute_force_ici(const channel::TapCorrelation &corr, const CMatrix &rxx, int n_tx, int n_rx, int j)
{
    const int n = corr.n_samples();
    const int v = corr.n_taps();
    const double two_pi = 2.0 * std::numbers::pi;
    CMatrix out = CMatrix::Zero(n_rx, n_rx);
    for (int a = 0; a < n_rx; ++a)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
            {
                if (p == j || q == j)
                    continue;
                for (int r1 = 0; r1 < n; ++r1)
                    for (int r2 = 0; r2 < n; ++r2)
                        for (int l = 0; l < v; ++l)
                        {
                            // H(j,p) carries exp(j2pi (r1 (p - j) - l p) / n) / n per tap sample.
                            const cplx e1 = std::polar(1.0, two_pi * (r1 * (p - j) - l * p) / n) / double(n);
                            const cplx e2 = std::polar(1.0, two_pi * (r2 * (q - j) - l * q) / n) / double(n);
                            const cplx m = corr.per_tap[l](r1, r2) * e1 * std::conj(e2);
                            for (int b = 0; b < n_tx; ++b)
                                out(a, a) += m * rxx(p * n_tx + b, q * n_tx + b);
                        }
            }
    return out;
}

} // namespace hapsim::testing

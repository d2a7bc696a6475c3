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

#include <cstdint>
#include <vector>

#include <omp.h>

#include "hapsim/random.hpp"

namespace hapsim {

// Caps the OpenMP worker count; 0 restores the runtime default.
void set_thread_limit(int threads);
int thread_limit();

// Reads HAPSIM_THREADS and applies it. Returns the value applied (0 if unset).
int apply_thread_env();

// Evaluates fn(stream, index) for every index with a private stream derived
// from (seed, index). Output order is the index order, so the result does not
// depend on the number of workers.
template <typename F>
auto map_trials(std::size_t n, std::uint64_t seed, F &&fn)
{
    using T = decltype(fn(std::declval<RandomStream &>(), std::size_t{}));
    std::vector<T> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    {
        RandomStream rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        out[static_cast<std::size_t>(i)] = fn(rng, static_cast<std::size_t>(i));
    }
    return out;
}

template <typename F>
auto map_trials_serial(std::size_t n, std::uint64_t seed, F &&fn)
{
    using T = decltype(fn(std::declval<RandomStream &>(), std::size_t{}));
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        RandomStream rng(derive_seed(seed, i));
        out[i] = fn(rng, i);
    }
    return out;
}

// Fixed-order sum, so reductions are reproducible bit for bit.
template <typename T>
T ordered_sum(const std::vector<T> &v, T zero)
{
    T acc = zero;
    for (const auto &x : v)
        acc += x;
    return acc;
}

} // namespace hapsim

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

#include "hapsim/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hapsim {

namespace {
int g_default_threads = 0;
int g_limit = 0;
} // namespace

void set_thread_limit(int threads)
{
    if (g_default_threads == 0)
        g_default_threads = omp_get_max_threads();
    g_limit = threads > 0 ? threads : 0;
    omp_set_num_threads(g_limit > 0 ? g_limit : g_default_threads);
}

int thread_limit() { return g_limit > 0 ? g_limit : omp_get_max_threads(); }

int apply_thread_env()
{
    const char *env = std::getenv("HAPSIM_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    int n = 0;
    try
    {
        n = std::stoi(env);
    }
    catch (const std::exception &)
    {
        throw ConfigError(std::string("HAPSIM_THREADS: not an integer: ") + env);
    }
    if (n < 1)
        throw ConfigError("HAPSIM_THREADS: must be >= 1");
    set_thread_limit(n);
    return n;
}

} // namespace hapsim

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

#include <doctest.h>

#include <cstdlib>

#include "hapsim/parallel.hpp"

using namespace hapsim;

TEST_CASE("map_trials equals its serial twin bitwise")
{
    auto fn = [](RandomStream &rng, std::size_t i) { return rng.normal() * static_cast<double>(i + 1); };
    const auto par = map_trials(5000, 123, fn);
    const auto ser = map_trials_serial(5000, 123, fn);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i)
        CHECK(par[i] == ser[i]);
    CHECK(ordered_sum(par, 0.0) == ordered_sum(ser, 0.0));
}

TEST_CASE("results do not depend on the thread count")
{
    auto fn = [](RandomStream &rng, std::size_t) { return rng.uniform(0.0, 1.0); };
    set_thread_limit(1);
    const auto one = map_trials(1024, 5, fn);
    set_thread_limit(4);
    const auto four = map_trials(1024, 5, fn);
    set_thread_limit(0);
    CHECK(one == four);
}

TEST_CASE("HAPSIM_THREADS is validated")
{
    ::setenv("HAPSIM_THREADS", "0", 1);
    CHECK_THROWS_AS(apply_thread_env(), ConfigError);
    ::setenv("HAPSIM_THREADS", "abc", 1);
    CHECK_THROWS_AS(apply_thread_env(), ConfigError);
    ::setenv("HAPSIM_THREADS", "2", 1);
    CHECK(apply_thread_env() == 2);
    CHECK(thread_limit() == 2);
    ::unsetenv("HAPSIM_THREADS");
    CHECK(apply_thread_env() == 0);
    set_thread_limit(0);
}
